"""Both sides of the generalized hockey-stick identity, with verification reports.

    sum_{i=0}^{k} C((r+1)i + n, i)
        = sum_{alpha} sign(alpha) * prod_j C(r, alpha_j - 1)
                      * C((r+1)k + n + 1 - |alpha| + len(alpha), k - |alpha|)

where alpha runs over ``composition_universe(k, r)``. ``r = 0`` gives the
classical hockey stick, ``r = 1`` the big hockey stick and pucks.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .exact_core import Composition, binomial, composition_universe
from .involution import audit, universe_size
from .tableau import count_tableaux

DEFAULT_BUDGET = 10 ** 6

# (r, n) -> OEIS id of the sequence k -> lhs(k, n, r); metadata only
OEIS_IDS = {
    (0, 0): "A000027", (0, 1): "A000217", (0, 2): "A000292", (0, 3): "A000332",
    (0, 4): "A000389", (0, 5): "A000579",
    (1, 0): "A006134", (1, 1): "A079309", (1, 2): "A057552", (1, 3): "A371965",
    (1, 4): "A371964", (1, 5): "A371963",
    (2, 0): "A188675", (2, 1): "A263134", (2, 2): "A087413",
    (3, 0): "A225612", (4, 0): "A225615",
}


class BudgetExceeded(RuntimeError):
    def __init__(self, size: int, budget: int):
        super().__init__(f"universe has {size} elements, over the enumeration budget of {budget}")
        self.size = size
        self.budget = budget


def lhs(k: int, n: int, r: int) -> int:
    return sum(binomial((r + 1) * i + n, i) for i in range(k + 1))


@dataclass(frozen=True)
class ShapeTerm:
    alpha: Composition
    sign: int
    tableaux: int
    binom: int

    @property
    def value(self) -> int:
        return self.sign * self.tableaux * self.binom


def rhs_terms(k: int, n: int, r: int) -> list[ShapeTerm]:
    """One signed term per shape, in composition-universe order."""
    terms = []
    for alpha in composition_universe(k, r):
        top = (r + 1) * k + n + 1 - alpha.size() + alpha.length()
        terms.append(ShapeTerm(alpha, alpha.sign(), count_tableaux(alpha, r),
                               binomial(top, k - alpha.size())))
    return terms


def rhs(k: int, n: int, r: int) -> int:
    return sum(t.value for t in rhs_terms(k, n, r))


def rhs_pucks(k: int, n: int) -> int:
    return sum((-1) ** i * binomial(2 * k + 1 + n - i, k - 2 * i) for i in range(k // 2 + 1))


def rhs_hockey(k: int, n: int) -> int:
    return binomial(k + 1 + n, k)


@dataclass
class VerificationReport:
    k: int
    n: int
    r: int
    lhs: int
    rhs: int
    terms: list[ShapeTerm] = field(default_factory=list)
    weight_sum: int | None = None
    universe_size: int | None = None
    audit_ok: bool | None = None

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.k, self.n, self.r)

    @property
    def passed(self) -> bool:
        if self.lhs != self.rhs:
            return False
        if self.weight_sum is not None and self.weight_sum != self.lhs:
            return False
        return self.audit_ok is not False

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "params": {"k": self.k, "n": self.n, "r": self.r},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "weight_sum": self.weight_sum,
            "universe": self.universe_size,
            "status": self.status,
            "terms": [{"alpha": list(t.alpha.parts), "sign": t.sign, "tableaux": t.tableaux,
                       "binomial": t.binom, "term": t.value} for t in self.terms],
        }


def verify(k: int, n: int, r: int, with_audit: bool = False,
           budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Evaluate both sides; with ``with_audit`` also run tau over the whole universe.

    Raises :class:`BudgetExceeded` before enumerating anything if the
    universe is larger than ``budget``.
    """
    terms = rhs_terms(k, n, r)
    report = VerificationReport(k, n, r, lhs(k, n, r), sum(t.value for t in terms), terms)
    if with_audit:
        size = universe_size(k, n, r)
        if size > budget:
            raise BudgetExceeded(size, budget)
        res = audit(k, n, r)
        report.weight_sum = res.weight_sum
        report.universe_size = res.size
        report.audit_ok = res.ok
    return report


CSV_COLUMNS = ["k", "n", "r", "lhs", "rhs", "weight_sum", "universe", "status"]


def reports_to_csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rep in reports:
        w.writerow([rep.k, rep.n, rep.r, rep.lhs, rep.rhs,
                    "" if rep.weight_sum is None else rep.weight_sum,
                    "" if rep.universe_size is None else rep.universe_size, rep.status])
    return buf.getvalue()


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([rep.to_json() for rep in reports], indent=2) + "\n"


def oeis_terms(r: int, n: int, count: int) -> list[int]:
    """``lhs(k, n, r)`` for ``k = 0 .. count-1``, accumulated incrementally."""
    if count < 1:
        raise ValueError("count must be at least 1")
    out, acc = [], 0
    for i in range(count):
        acc += binomial((r + 1) * i + n, i)
        out.append(acc)
    return out
