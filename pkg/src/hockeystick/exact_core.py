"""Exact integer helpers and bounded compositions.

A composition is stored as a tuple of positive parts. The empty composition
is an ordinary value with size 0, length 0 and sign +1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


def binomial(n: int, k: int) -> int:
    """Return ``n`` choose ``k`` exactly, or 0 when ``k`` lies outside ``[0, n]``."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True, order=False)
class Composition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"composition parts must be positive integers: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def sign(self) -> int:
        return -1 if (self.size() - self.length()) % 2 else 1

    def first(self) -> int:
        if not self.parts:
            raise ValueError("empty composition has no first part")
        return self.parts[0]

    def sort_key(self) -> tuple:
        return (self.size(), self.length(), self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def _as_composition(alpha: Composition | Iterable[int]) -> Composition:
    return alpha if isinstance(alpha, Composition) else Composition(tuple(alpha))


def sign(alpha: Composition | Iterable[int]) -> int:
    """(-1) ** (size - length)."""
    return _as_composition(alpha).sign()


def extend_first(alpha: Composition) -> Composition:
    """Add one to the first part."""
    alpha = _as_composition(alpha)
    if not alpha:
        raise ValueError("extend_first needs a nonempty composition")
    return Composition((alpha.parts[0] + 1,) + alpha.parts[1:])


def prepend_two(alpha: Composition) -> Composition:
    alpha = _as_composition(alpha)
    return Composition((2,) + alpha.parts)


def shrink_first(alpha: Composition) -> Composition:
    """Drop the first part if it is at most 2, otherwise decrement it."""
    alpha = _as_composition(alpha)
    if not alpha:
        raise ValueError("shrink_first of the empty composition")
    head, rest = alpha.parts[0], alpha.parts[1:]
    if head <= 2:
        return Composition(rest)
    return Composition((head - 1,) + rest)


def in_universe(alpha: Composition, k: int, r: int) -> bool:
    """Membership predicate for the bounded set: parts in [2, r+1], size <= k."""
    return alpha.size() <= k and all(2 <= p <= r + 1 for p in alpha.parts)


def composition_universe(k: int, r: int) -> list[Composition]:
    """All compositions of every ``j <= k`` with parts in ``[2, r+1]``.

    Ordered by size, then length, then lexicographically on the parts. The
    empty composition always comes first.
    """
    if k < 0 or r < 0:
        raise ValueError("k and r must be nonnegative")
    found: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], total: int) -> None:
        found.append(prefix)
        for part in range(2, r + 2):
            if total + part > k:
                break
            grow(prefix + (part,), total + part)

    grow((), 0)
    comps = [Composition(p) for p in found]
    comps.sort(key=Composition.sort_key)
    return comps
