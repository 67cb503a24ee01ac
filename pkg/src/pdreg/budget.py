"""Wall-clock and step limits for the exhaustive searches.

A budget is installed for the current context with :func:`limits`; long loops
call :func:`tick`, which raises :class:`BudgetExceeded` once either limit is hit.
Without an installed budget ``tick`` only counts.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class Budget:
    deadline: float | None = None
    max_steps: int | None = None
    steps: int = 0

    def charge(self, n: int) -> None:
        self.steps += n
        if self.max_steps is not None and self.steps > self.max_steps:
            raise BudgetExceeded(f"step budget of {self.max_steps} exhausted")
        # the clock is only read every 256 steps
        if self.deadline is not None and (self.steps & 255) < n and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted")


_current: ContextVar[Budget | None] = ContextVar("pdreg_budget", default=None)


def tick(n: int = 1) -> None:
    b = _current.get()
    if b is not None:
        b.charge(n)


@contextmanager
def limits(seconds: float | None = None, steps: int | None = None) -> Iterator[Budget]:
    deadline = None if seconds is None else time.monotonic() + seconds
    b = Budget(deadline, steps)
    token = _current.set(b)
    try:
        yield b
    finally:
        _current.reset(token)
