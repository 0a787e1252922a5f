"""Labeled tableaux with an implicit empty leading box in every row.

A row of the Young diagram with ``a`` boxes is stored as its ``a - 1``
labels. Labels are strictly increasing within a row and lie in
``range(bound)``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .exact_core import Composition, binomial, extend_first, prepend_two, shrink_first


@dataclass(frozen=True)
class LabeledTableau:
    shape: Composition
    rows: tuple[tuple[int, ...], ...]
    bound: int

    def __post_init__(self):
        if not isinstance(self.shape, Composition):
            object.__setattr__(self, "shape", Composition(tuple(self.shape)))
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.bound < 0:
            raise ValueError(f"label bound must be nonnegative, got {self.bound}")
        if len(rows) != self.shape.length():
            raise ValueError(f"{len(rows)} rows for shape {self.shape}")
        for part, row in zip(self.shape.parts, rows):
            if len(row) != part - 1:
                raise ValueError(f"row {row} does not fit a part of size {part}")
            for a, b in zip(row, row[1:]):
                if a >= b:
                    raise ValueError(f"row {row} is not strictly increasing")
            if row and (row[0] < 0 or row[-1] >= self.bound):
                raise ValueError(f"row {row} has labels outside [0, {self.bound})")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], bound: int) -> "LabeledTableau":
        rows = tuple(tuple(row) for row in rows)
        return cls(Composition(tuple(len(row) + 1 for row in rows)), rows, bound)

    @classmethod
    def empty(cls, bound: int) -> "LabeledTableau":
        return cls(Composition(()), (), bound)

    def is_empty(self) -> bool:
        return not self.rows

    def sign(self) -> int:
        return self.shape.sign()

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows], "bound": self.bound}

    @classmethod
    def from_json(cls, data: dict) -> "LabeledTableau":
        return cls(Composition(tuple(data["shape"])), data["rows"], data["bound"])

    def __str__(self) -> str:
        if not self.rows:
            return "()"
        return "/".join("[" + ",".join(map(str, row)) + "]" for row in self.rows)


def _check_shape(alpha: Composition, r: int) -> None:
    for part in alpha.parts:
        if part > r + 1:
            raise ValueError(f"shape {alpha} has a part exceeding r+1={r + 1}; no labeling exists")


def enumerate_tableaux(alpha: Composition, r: int) -> list[LabeledTableau]:
    """Every labeling of ``alpha`` with labels below ``r``.

    Each row runs through the ``(a-1)``-subsets of ``range(r)`` in
    lexicographic order; the first row varies slowest. Shapes with a part
    larger than ``r + 1`` raise ``ValueError`` instead of returning ``[]``.
    """
    if not isinstance(alpha, Composition):
        alpha = Composition(tuple(alpha))
    _check_shape(alpha, r)
    choices = [list(combinations(range(r), part - 1)) for part in alpha.parts]
    return [LabeledTableau(alpha, rows, r) for rows in product(*choices)]


def count_tableaux(alpha: Composition, r: int) -> int:
    if not isinstance(alpha, Composition):
        alpha = Composition(tuple(alpha))
    total = 1
    for part in alpha.parts:
        total *= binomial(r, part - 1)
    return total


def _check_label(lam: LabeledTableau, a: int) -> None:
    if not 0 <= a < lam.bound:
        raise ValueError(f"label {a} outside [0, {lam.bound})")


def oplus(lam: LabeledTableau, a: int) -> LabeledTableau:
    """New first row holding the single label ``a``; shape gains a leading 2."""
    _check_label(lam, a)
    return LabeledTableau(prepend_two(lam.shape), ((a,),) + lam.rows, lam.bound)


def plus(lam: LabeledTableau, a: int) -> LabeledTableau:
    """Insert ``a`` into the first row; shape's first part grows by one."""
    _check_label(lam, a)
    if lam.is_empty():
        raise ValueError("cannot insert a label into an empty tableau")
    first = lam.rows[0]
    pos = bisect.bisect_left(first, a)
    if pos < len(first) and first[pos] == a:
        raise ValueError(f"label {a} already in first row {first}")
    row = first[:pos] + (a,) + first[pos:]
    return LabeledTableau(extend_first(lam.shape), (row,) + lam.rows[1:], lam.bound)


def shrink(lam: LabeledTableau) -> LabeledTableau:
    """Drop the smallest first-row label, or the whole row if it has 2 boxes or fewer."""
    if lam.is_empty():
        raise ValueError("shrink of the empty tableau")
    if lam.shape.parts[0] > 2:
        rows = (lam.rows[0][1:],) + lam.rows[1:]
    else:
        rows = lam.rows[1:]
    return LabeledTableau(shrink_first(lam.shape), rows, lam.bound)


def first_label(lam: LabeledTableau) -> int:
    if lam.is_empty() or not lam.rows[0]:
        raise ValueError("tableau has no first-row label")
    return lam.rows[0][0]
