"""Labeled lattice sequences and the sign-reversing involution on them.

An element of type ``(k, n, r)`` pairs a labeled tableau whose shape lies in
``composition_universe(k, r)`` with a lattice sequence of width
``r*k + n + 1 + len(shape)`` and height ``k - |shape|``. All statistics are
read at the column ``eta = r*k + n + 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from .exact_core import binomial, composition_universe, in_universe
from .lattice import LatticeSequence, enumerate_sequences, last_ascent, segment, shift
from .tableau import (LabeledTableau, count_tableaux, enumerate_tableaux, first_label, oplus,
                      plus, shrink)


class InvolutionDefect(AssertionError):
    """A case formula produced something it never should."""


class Case(str, enum.Enum):
    FIXED = "FIXED"
    CASE1 = "CASE1"
    CASE3 = "CASE3"
    CASE4 = "CASE4"
    CASE5 = "CASE5"


# tau sends each moving case to its partner
PARTNER = {Case.CASE1: Case.CASE3, Case.CASE3: Case.CASE1,
           Case.CASE4: Case.CASE5, Case.CASE5: Case.CASE4}


@dataclass(frozen=True)
class LabeledLatticeSequence:
    tableau: LabeledTableau
    sequence: LatticeSequence
    k: int
    n: int
    r: int

    def __post_init__(self):
        k, n, r = self.k, self.n, self.r
        if min(k, n, r) < 0:
            raise ValueError(f"parameters must be nonnegative: {(k, n, r)}")
        shape = self.tableau.shape
        if self.tableau.bound != r:
            raise ValueError(f"tableau bound {self.tableau.bound} != r={r}")
        if not in_universe(shape, k, r):
            raise ValueError(f"shape {shape} not in C({k}, {r})")
        want_w = r * k + n + 1 + shape.length()
        want_h = k - shape.size()
        if self.sequence.width() != want_w or self.sequence.height() != want_h:
            raise ValueError(
                f"sequence {self.sequence} has width/height "
                f"{self.sequence.width()}/{self.sequence.height()}, expected {want_w}/{want_h}")

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.k, self.n, self.r)

    @property
    def eta(self) -> int:
        return self.r * self.k + self.n + 1

    def to_json(self) -> dict:
        return {"tableau": self.tableau.to_json(), "sequence": self.sequence.to_json(),
                "params": {"k": self.k, "n": self.n, "r": self.r}}

    @classmethod
    def from_json(cls, data: dict) -> "LabeledLatticeSequence":
        p = data["params"]
        return cls(LabeledTableau.from_json(data["tableau"]),
                   LatticeSequence.from_json(data["sequence"]), p["k"], p["n"], p["r"])

    def __str__(self) -> str:
        return f"({self.tableau}, {self.sequence})"


@dataclass(frozen=True)
class InvolutionContext:
    eta: int
    omega: int
    gamma: int
    mu: int
    nu: int | None
    case_id: Case


def weight(x: LabeledLatticeSequence) -> int:
    return x.tableau.sign()


def classify(x: LabeledLatticeSequence) -> InvolutionContext:
    lam, e, r = x.tableau, x.sequence.entries, x.r
    eta = x.eta
    omega = e[eta + 1] - e[eta]
    gamma = last_ascent(e, eta)
    mu = eta - 1 - gamma
    nu = None if lam.is_empty() else eta - 1 - r * omega - first_label(lam)

    # mu < r*omega is decided before any division by r, so r = 0 is safe
    if mu < r * omega:
        case = Case.CASE1
        if gamma == -1:
            raise InvolutionDefect(f"CASE1 with no ascent west of eta: {x}")
    elif nu is None:
        case = Case.FIXED
    elif gamma <= nu:
        case = Case.CASE3 if lam.shape.parts[0] == 2 else Case.CASE4
    else:
        case = Case.CASE5
        if gamma == -1:
            raise InvolutionDefect(f"CASE5 with no ascent west of eta: {x}")
    if nu is not None and nu < 0:
        raise InvolutionDefect(f"negative nu={nu} for {x}")
    return InvolutionContext(eta, omega, gamma, mu, nu, case)


def tau(x: LabeledLatticeSequence) -> LabeledLatticeSequence:
    """Apply the involution. Output is revalidated; a malformed result raises."""
    ctx = classify(x)
    case = ctx.case_id
    if case is Case.FIXED:
        return x
    lam, e, r = x.tableau, x.sequence.entries, x.r
    eta, gamma, mu, nu = ctx.eta, ctx.gamma, ctx.mu, ctx.nu

    if case is Case.CASE1:
        new_lam = oplus(lam, mu % r)
        entries = (segment(e, 0, gamma)
                   + shift(segment(e, gamma + 1, eta), -1)
                   + (e[eta] - 1 + mu // r,)
                   + shift(segment(e, eta + 1), -2))
    elif case is Case.CASE3:
        new_lam = shrink(lam)
        # entry eta+1 is dropped: the width shrinks by one
        entries = (segment(e, 0, nu)
                   + shift(segment(e, nu + 1, eta), 1)
                   + shift(segment(e, eta + 2), 2))
    elif case is Case.CASE4:
        new_lam = shrink(lam)
        entries = segment(e, 0, nu) + shift(segment(e, nu + 1), 1)
    else:
        new_lam = plus(lam, mu % r)
        entries = segment(e, 0, gamma) + shift(segment(e, gamma + 1), -1)

    try:
        return LabeledLatticeSequence(new_lam, LatticeSequence(entries), x.k, x.n, x.r)
    except ValueError as exc:
        raise InvolutionDefect(f"{case.value} produced an invalid element from {x}: {exc}") from exc


def shape_count(alpha, k: int, n: int, r: int) -> int:
    """Number of elements of type (k, n, r) whose tableau has shape ``alpha``."""
    return count_tableaux(alpha, r) * binomial(
        (r + 1) * k + n + 1 - alpha.size() + alpha.length(), k - alpha.size())


def universe_size(k: int, n: int, r: int) -> int:
    return sum(shape_count(a, k, n, r) for a in composition_universe(k, r))


def iter_universe(k: int, n: int, r: int) -> Iterator[LabeledLatticeSequence]:
    for alpha in composition_universe(k, r):
        seqs = enumerate_sequences(r * k + n + 1 + alpha.length(), k - alpha.size())
        for lam in enumerate_tableaux(alpha, r):
            for L in seqs:
                yield LabeledLatticeSequence(lam, L, k, n, r)


def enumerate_universe(k: int, n: int, r: int) -> list[LabeledLatticeSequence]:
    """Every element of type (k, n, r): shape order, then tableau, then sequence."""
    return list(iter_universe(k, n, r))


def fixed_points(k: int, n: int, r: int) -> list[LabeledLatticeSequence]:
    empty = LabeledTableau.empty(r)
    out = []
    for L in enumerate_sequences(r * k + n + 1, k):
        x = LabeledLatticeSequence(empty, L, k, n, r)
        if classify(x).case_id is Case.FIXED:
            out.append(x)
    return out


def fixed_point_census(k: int, n: int, r: int) -> dict[int, int]:
    """Fixed points grouped by omega, for every omega in 0..k."""
    census = {w: 0 for w in range(k + 1)}
    for x in fixed_points(k, n, r):
        census[classify(x).omega] += 1
    return census


@dataclass
class AuditRecord:
    index: int
    case: Case
    mate_index: int


@dataclass
class AuditResult:
    k: int
    n: int
    r: int
    size: int = 0
    weight_sum: int = 0
    fixed: int = 0
    case_counts: dict = field(default_factory=lambda: {c.value: 0 for c in Case})
    involution_failures: list = field(default_factory=list)
    sign_failures: list = field(default_factory=list)
    type_failures: list = field(default_factory=list)
    fixed_failures: list = field(default_factory=list)
    pairing_failures: list = field(default_factory=list)
    records: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.involution_failures or self.sign_failures or self.type_failures
                    or self.fixed_failures or self.pairing_failures)


def audit(k: int, n: int, r: int, keep_records: bool = False) -> AuditResult:
    """Apply tau to every element and check every involution property."""
    universe = enumerate_universe(k, n, r)
    index = {x: i for i, x in enumerate(universe)}
    res = AuditResult(k, n, r, size=len(universe))
    for i, x in enumerate(universe):
        w = weight(x)
        res.weight_sum += w
        ctx = classify(x)
        case = ctx.case_id
        res.case_counts[case.value] += 1
        try:
            y = tau(x)
        except InvolutionDefect:
            res.type_failures.append(i)
            continue
        j = index.get(y)
        if j is None:
            res.type_failures.append(i)
            continue
        if keep_records:
            res.records.append(AuditRecord(i, case, j))
        if tau(y) != x:
            res.involution_failures.append(i)
        if y == x:
            res.fixed += 1
            if w != 1 or not x.tableau.is_empty():
                res.fixed_failures.append(i)
        else:
            if weight(y) != -w:
                res.sign_failures.append(i)
            if classify(y).case_id is not PARTNER[case]:
                res.pairing_failures.append(i)
        if (y == x) != (x.tableau.is_empty() and ctx.mu >= r * ctx.omega):
            res.fixed_failures.append(i)
    return res
