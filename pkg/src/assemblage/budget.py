"""Step budgets for the search-heavy operations.

Every potentially exponential search takes a budget; running out raises
BudgetExhausted so callers can tell "no" apart from "gave up".
"""

from __future__ import annotations

DEFAULT_LIMIT = 50_000_000


class BudgetExhausted(RuntimeError):
    def __init__(self, operation="search"):
        super().__init__("budget exhausted during %s" % operation)
        self.operation = operation


class Budget:
    def __init__(self, limit=DEFAULT_LIMIT, operation="search"):
        self.limit = limit
        self.used = 0
        self.operation = operation

    def tick(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExhausted(self.operation)

    @property
    def remaining(self):
        return max(0, self.limit - self.used)

    def __repr__(self):
        return "Budget(used=%d, limit=%d)" % (self.used, self.limit)


def as_budget(budget):
    if budget is None:
        return Budget()
    if isinstance(budget, int):
        return Budget(budget)
    return budget
