"""Fan a statement out over a corpus and collect a deterministic report."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Iterable, Iterator, Sequence

from .budget import BudgetExceeded, limits
from .checks import CHECKS, HUNTS, Instance, Statement, evaluate, graph_instances, random_instances
from .corpus import BadRecord, enumerate_corpus
from .homology import FieldTag

SCHEMA = 1
DEFAULT_TIMEOUT = 10.0
STATUSES = ("holds", "fails", "skipped", "exceeded")


@dataclass
class Verdict:
    index: int
    label: str
    field: str
    status: str
    detail: dict
    seconds: float
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"index": self.index, "label": self.label, "field": self.field, "status": self.status,
               "detail": self.detail, "seconds": round(self.seconds, 6)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class CheckReport:
    id: str
    statement: str
    mode: str  # "check" or "hunt"
    corpus: str
    fields: list[str]
    seed: int | None = None
    random_instances: int = 0
    timeout_secs: float | None = None
    verdicts: list[Verdict] = field(default_factory=list)
    bad_records: list[BadRecord] = field(default_factory=list)
    wall_seconds: float = 0.0
    truncated: bool = False

    def counts(self) -> dict[str, int]:
        c = dict.fromkeys(STATUSES, 0)
        for v in self.verdicts:
            c[v.status] += 1
        return c

    @property
    def instances_tested(self) -> int:
        return len(self.verdicts)

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.status == "fails"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "mode": self.mode,
            "id": self.id,
            "statement": self.statement,
            "corpus": self.corpus,
            "fields": self.fields,
            "seed": self.seed,
            "random_instances": self.random_instances,
            "timeout_secs": self.timeout_secs,
            "instances_tested": self.instances_tested,
            "counts": self.counts(),
            "wall_seconds": round(self.wall_seconds, 3),
            "cpu_seconds": round(sum(v.seconds for v in self.verdicts), 3),
            "truncated": self.truncated,
            "bad_records": [{"origin": b.origin, "message": b.message} for b in self.bad_records],
            "verdicts": [v.to_json() for v in self.verdicts],
        }
        if self.mode == "hunt":
            first = self.failures[:1]
            out["result"] = "counterexample" if first else "none found"
            out["counterexample"] = first[0].to_json() if first else None
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, ensure_ascii=False)

    def summary(self) -> str:
        c = self.counts()
        parts = " ".join(f"{k}={c[k]}" for k in STATUSES)
        head = f"{self.id} [{','.join(self.fields)}] on {self.corpus}: {self.instances_tested} tested, {parts}"
        return f"{head} ({self.wall_seconds:.1f}s)"


def lookup(ident: str, mode: str) -> Statement:
    table = CHECKS if mode == "check" else HUNTS
    if ident not in table:
        raise KeyError(f"unknown {mode} id {ident!r}; known: {', '.join(table)}")
    return table[ident]


_Task = tuple[int, str, Instance, FieldTag, float | None]


def _run_one(task: _Task) -> Verdict:
    index, sid, inst, fld, timeout = task
    stmt = CHECKS.get(sid) or HUNTS[sid]
    start = time.perf_counter()
    try:
        with limits(seconds=timeout):
            status, detail = evaluate(stmt, inst, fld)
    except BudgetExceeded as exc:
        status, detail = "exceeded", {"reason": str(exc)}
    elapsed = time.perf_counter() - start
    witness = inst.witness() if status == "fails" else None
    return Verdict(index, inst.label, fld.value if stmt.field_sensitive else "any", status, detail, elapsed, witness)


def _tasks(stmt: Statement, instances: Iterable[Instance], fields: Sequence[FieldTag],
           timeout: float | None) -> Iterator[_Task]:
    use = list(fields) if stmt.field_sensitive else list(fields)[:1]
    for index, inst in enumerate(instances):
        for fld in use:
            yield index, stmt.id, inst, fld, timeout


def run(ident: str, corpus: str, fields: Sequence[FieldTag], mode: str = "check", jobs: int = 1,
        timeout: float | None = DEFAULT_TIMEOUT, random_count: int = 0, seed: int = 0,
        budget_secs: float | None = None, extra: Iterable[Instance] = ()) -> CheckReport:
    """Evaluate one statement on every instance of a corpus.

    Results come back in corpus order whatever ``jobs`` is, so the report (and
    the first witness in a hunt) does not depend on scheduling.
    """
    stmt = lookup(ident, mode)
    bad: list[BadRecord] = []
    used = [f.value for f in fields] if stmt.field_sensitive else ["any"]
    rep = CheckReport(ident, stmt.text, mode, corpus, used, seed if random_count else None,
                      random_count, timeout, bad_records=bad)
    instances: Iterator[Instance] = iter(extra)
    if corpus:
        items = ((it.origin, it.graph) for it in enumerate_corpus(corpus, bad))
        instances = _chain(instances, graph_instances(items, stmt.kind))
    if random_count and stmt.kind != "graph":
        instances = _chain(instances, random_instances(random_count, seed, stmt.kind))
    tasks = _tasks(stmt, instances, fields, timeout)
    start = time.monotonic()
    deadline = None if budget_secs is None else start + budget_secs

    def consume(results: Iterator[Verdict]) -> None:
        for v in results:
            rep.verdicts.append(v)
            if mode == "hunt" and v.status == "fails":
                return
            if deadline is not None and time.monotonic() > deadline:
                rep.truncated = True
                return

    if jobs <= 1:
        consume(_run_one(t) for t in tasks)
    else:
        with get_context("fork").Pool(jobs) as pool:
            consume(pool.imap(_run_one, tasks, chunksize=4))
            pool.terminate()
    rep.wall_seconds = time.monotonic() - start
    return rep


def _chain(*its: Iterable[Instance]) -> Iterator[Instance]:
    for it in its:
        yield from it

