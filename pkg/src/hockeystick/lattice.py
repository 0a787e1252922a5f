"""Lattice sequences and the statistics read off at a vertical guide line.

A lattice sequence ``(L_0, ..., L_{m+1})`` with ``0 = L_0 <= ... <= L_{m+1}``
encodes a monotone path from ``(0, 0)`` to ``(m, L_{m+1})``: ``L_i`` is the
height of the ``i``-th horizontal step, and a rise ``L_i < L_{i+1}`` is a
run of vertical steps on the line ``x = i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence


@dataclass(frozen=True)
class LatticeSequence:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise ValueError(f"lattice sequence needs at least 2 entries: {entries}")
        if entries[0] != 0:
            raise ValueError(f"lattice sequence must start at 0: {entries}")
        for a, b in zip(entries, entries[1:]):
            if a > b:
                raise ValueError(f"lattice sequence must be weakly increasing: {entries}")

    def width(self) -> int:
        return len(self.entries) - 2

    def height(self) -> int:
        return self.entries[-1]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def to_json(self) -> dict:
        return {"entries": list(self.entries)}

    @classmethod
    def from_json(cls, data: dict) -> "LatticeSequence":
        return cls(tuple(data["entries"]))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class PathStats:
    eta: int
    omega: int
    gamma: int
    mu: int


def enumerate_sequences(m: int, n: int) -> list[LatticeSequence]:
    """All lattice sequences of width ``m`` and height ``n``, lexicographically."""
    if m < 0 or n < 0:
        raise ValueError("width and height must be nonnegative")
    return [LatticeSequence((0,) + inner + (n,))
            for inner in combinations_with_replacement(range(n + 1), m)]


def ascent_set(s: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(len(s) - 1) if s[i] < s[i + 1])


def last_ascent(s: Sequence[int], end: int) -> int:
    """Largest ascent of ``s[0..end]`` (inclusive), or -1 if there is none."""
    for i in range(end - 1, -1, -1):
        if s[i] < s[i + 1]:
            return i
    return -1


def path_stats(L: LatticeSequence, eta: int) -> PathStats:
    if not 0 <= eta <= L.width():
        raise ValueError(f"eta={eta} outside [0, {L.width()}]")
    e = L.entries
    gamma = last_ascent(e, eta)
    return PathStats(eta=eta, omega=e[eta + 1] - e[eta], gamma=gamma, mu=eta - 1 - gamma)


def segment(s: Sequence[int], i: int, j: int | None = None) -> tuple[int, ...]:
    """Inclusive slice ``s[i..j]``; ``j=None`` runs to the last entry."""
    last = len(s) - 1
    if j is None:
        j = last
    if not (0 <= i and j <= last and i <= j + 1):
        raise ValueError(f"segment [{i}, {j}] out of range for length {len(s)}")
    return tuple(s[i:j + 1])


def shift(s: Iterable[int], a: int) -> tuple[int, ...]:
    return tuple(x + a for x in s)


def concat(*parts: Iterable[int]) -> tuple[int, ...]:
    out: tuple[int, ...] = ()
    for p in parts:
        out += tuple(p)
    return out


def in_fixed_class(L: LatticeSequence, r: int) -> bool:
    """Whether ``mu >= r * omega`` at the last column ``eta = width``."""
    st = path_stats(L, L.width())
    return st.mu >= r * st.omega


def psi(L: LatticeSequence, k: int, r: int, i: int) -> LatticeSequence:
    """Append ``r*(k-i)`` copies of ``i`` followed by ``k``.

    Takes a sequence of height ``i`` and width ``r*i + n`` to one of height
    ``k`` and width ``r*k + n + 1`` whose last column carries ``k - i``
    vertical steps.
    """
    if not 0 <= i <= k:
        raise ValueError(f"need 0 <= i <= k, got i={i}, k={k}")
    if L.height() != i:
        raise ValueError(f"sequence height {L.height()} != i={i}")
    if L.width() < r * i:
        raise ValueError(f"sequence width {L.width()} < r*i={r * i}")
    return LatticeSequence(L.entries + (i,) * (r * (k - i)) + (k,))


def phi(L: LatticeSequence, r: int, i: int, n: int) -> LatticeSequence:
    """Inverse of :func:`psi`: keep the prefix ``L[0 .. r*i + n + 1]``."""
    k = L.height()
    eta = L.width()
    if eta != r * k + n + 1:
        raise ValueError(f"width {eta} != r*k+n+1 = {r * k + n + 1}")
    st = path_stats(L, eta)
    if st.omega != k - i or st.mu < r * st.omega:
        raise ValueError(f"{L} is not in the fixed class for r={r}, i={i}")
    return LatticeSequence(segment(L.entries, 0, r * i + n + 1))
