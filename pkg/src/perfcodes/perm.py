"""Permutations of 1-based coordinates, and their action on bitset words."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..degree}``; ``images[i - 1]`` is the image of ``i``.

    Acting on a word, the permutation sends coordinate ``i`` to coordinate
    ``p(i)``.  Products compose right to left: ``(p * q)(i) == p(q(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Product of cycles, rightmost applied first (cycles may overlap)."""
        p = cls.identity(degree)
        for cyc in cycles:
            img = list(range(1, degree + 1))
            for a, b in zip(cyc, [*cyc[1:], cyc[0]]):
                img[a - 1] = b
            p = p * cls(tuple(img))
        return p

    @classmethod
    def transposition(cls, degree: int, a: int, b: int) -> Permutation:
        img = list(range(1, degree + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        im = self.images
        return Permutation(tuple(im[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def fixes(self, i: int) -> bool:
        return self.images[i - 1] == i

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    @cached_property
    def _byte_tables(self) -> tuple[tuple[int, ...], ...]:
        tables = []
        for base in range(0, self.degree, 8):
            width = min(8, self.degree - base)
            img = [1 << (self.images[base + j] - 1) for j in range(width)]
            t = [0] * (1 << width)
            for b in range(1, 1 << width):
                low = b & -b
                t[b] = t[b ^ low] | img[low.bit_length() - 1]
            tables.append(tuple(t))
        return tuple(tables)

    def apply_word(self, w: int) -> int:
        out = 0
        for t in self._byte_tables:
            out |= t[w & 0xFF]
            w >>= 8
        return out

    def apply_set(self, points: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.images[i - 1] for i in points))

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def word_mapper(p: Permutation):
    """Fast closure applying ``p`` to words; avoids attribute lookups in hot loops."""
    tables = p._byte_tables
    if len(tables) == 1:
        (t0,) = tables
        return t0.__getitem__
    if len(tables) == 2:
        t0, t1 = tables
        return lambda w: t0[w & 0xFF] | t1[w >> 8]
    return p.apply_word


def duplicator(pi: Permutation) -> Permutation:
    """The permutation acting as ``pi`` on both n-blocks and fixing n + 1."""
    n = pi.degree
    return Permutation((*pi.images, n + 1, *(j + n + 1 for j in pi.images)))


def tau(u: int, n: int) -> Permutation:
    """Product of the transpositions (i, i + n + 1) over the support of ``u``."""
    img = list(range(1, 2 * n + 2))
    for i in range(1, n + 1):
        if (u >> (i - 1)) & 1:
            img[i - 1], img[i + n] = i + n + 1, i
    return Permutation(tuple(img))
