"""Steiner triple systems: extraction from codes, doubling, isomorphism."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .core import Code, word
from .perm import Permutation, duplicator, tau  # noqa: F401  (re-exported)

Triple = tuple[int, int, int]


class STSError(ValueError):
    pass


class NotACodeword(ValueError):
    pass


def _triple(t: Iterable[int]) -> Triple:
    a, b, c = sorted(t)
    return a, b, c


@dataclass(frozen=True)
class SteinerTripleSystem:
    order: int
    triples: frozenset[Triple]

    def __post_init__(self):
        object.__setattr__(self, "triples", frozenset(_triple(t) for t in self.triples))
        validate(self.order, self.triples)

    @classmethod
    def from_triples(cls, order: int, triples: Iterable[Iterable[int]]) -> SteinerTripleSystem:
        return cls(order, frozenset(_triple(t) for t in triples))

    @cached_property
    def third_table(self) -> list[list[int]]:
        """``third_table[a][b]`` is the third point of the triple through a and b."""
        n = self.order
        t = [[0] * (n + 1) for _ in range(n + 1)]
        for a, b, c in self.triples:
            t[a][b] = t[b][a] = c
            t[a][c] = t[c][a] = b
            t[b][c] = t[c][b] = a
        return t

    def third(self, a: int, b: int) -> int:
        return self.third_table[a][b]

    def triples_through(self, p: int) -> list[Triple]:
        return sorted(t for t in self.triples if p in t)

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self.triples))

    def __str__(self) -> str:
        return f"STS({self.order}): " + " ".join("{%d,%d,%d}" % t for t in self)


def validate(order: int, triples: Iterable[Triple]) -> None:
    """Raise STSError unless every pair of points is covered exactly once."""
    cover: dict[tuple[int, int], Triple] = {}
    for t in triples:
        a, b, c = t
        if not (1 <= a < b < c <= order):
            raise STSError(f"triple {t} is not three distinct points of 1..{order}")
        for pair in ((a, b), (a, c), (b, c)):
            if pair in cover:
                raise STSError(f"pair {pair} covered twice, by {cover[pair]} and {t}")
            cover[pair] = t
    for pair in combinations(range(1, order + 1), 2):
        if pair not in cover:
            raise STSError(f"pair {pair} is not covered")


def is_sts(order: int, triples: Iterable[Iterable[int]]) -> bool:
    try:
        validate(order, [_triple(t) for t in triples])
    except (STSError, ValueError):
        return False
    return True


@dataclass(frozen=True)
class ThetaFn:
    base: SteinerTripleSystem
    values: Mapping[Triple, int] = field(default_factory=dict)

    def __post_init__(self):
        vals = {_triple(t): int(v) & 1 for t, v in self.values.items()}
        if vals.keys() != self.base.triples:
            raise STSError("theta must be defined on exactly the triples of its system")
        object.__setattr__(self, "values", vals)

    def __call__(self, t: Iterable[int]) -> int:
        return self.values[_triple(t)]

    def zeros(self) -> list[Triple]:
        return sorted(t for t, v in self.values.items() if v == 0)

    @classmethod
    def constant(cls, base: SteinerTripleSystem, bit: int = 0) -> ThetaFn:
        return cls(base, {t: bit for t in base.triples})

    @classmethod
    def with_zeros(cls, base: SteinerTripleSystem, zeros: Iterable[Iterable[int]]) -> ThetaFn:
        zs = {_triple(t) for t in zeros}
        return cls(base, {t: 0 if t in zs else 1 for t in base.triples})


# --- constructions ------------------------------------------------------------

def neighborhood_sts(code: Code, y: int) -> SteinerTripleSystem:
    """The supports of x + y over codewords x at distance 3 from ``y``."""
    if y not in code:
        raise NotACodeword("y is not a codeword")
    n = code.n
    found = [t for t in combinations(range(1, n + 1), 3) if (y ^ word(t)) in code]
    try:
        return SteinerTripleSystem.from_triples(n, found)
    except STSError as exc:
        raise STSError(f"neighbourhood of a codeword is not an STS ({exc}); is the code perfect?") from None


def am_doubling(S: SteinerTripleSystem, theta: ThetaFn) -> SteinerTripleSystem:
    """Assmus-Mattson doubling: an STS(2n+1) on base points 1..n, bridge
    point n+1 and primed copies i' = i + n + 1."""
    if theta.base != S:
        raise STSError("theta is defined on a different system")
    n = S.order
    h = n + 1
    out: list[Triple] = [(i, h, i + h) for i in range(1, n + 1)]
    for t in S:
        i, j, k = t
        if theta(t) == 0:
            out += [(i, j, k), (i, j + h, k + h), (k, i + h, j + h), (j, i + h, k + h)]
        else:
            out += [(i + h, j + h, k + h), (i, j, k + h), (j, k, i + h), (i, k, j + h)]
    return SteinerTripleSystem.from_triples(2 * n + 1, out)


def theta_from_lambda(code: Code, lam, y: int) -> ThetaFn:
    """theta(supp(y + y')) = lambda(y) + lambda(y') on STS(code, y)."""
    if y not in code:
        raise NotACodeword("y is not a codeword")
    S = neighborhood_sts(code, y)
    ly = lam(y)
    return ThetaFn(S, {t: ly ^ lam(y ^ word(t)) for t in S.triples})


def apply_perm(p: Permutation, S: SteinerTripleSystem) -> SteinerTripleSystem:
    if p.degree != S.order:
        raise ValueError("permutation degree differs from the order")
    return SteinerTripleSystem.from_triples(S.order, (p.apply_set(t) for t in S.triples))


def fano() -> SteinerTripleSystem:
    from .core import hamming7_paper

    return neighborhood_sts(hamming7_paper(), 0)


# --- invariants -----------------------------------------------------------------

def pasch_configurations(S: SteinerTripleSystem) -> set[frozenset[Triple]]:
    """All sets of four triples on six points, each point on two of them."""
    third = S.third_table
    found: set[frozenset[Triple]] = set()
    for a in range(1, S.order + 1):
        lines = S.triples_through(a)
        for t1, t2 in combinations(lines, 2):
            b, c = [p for p in t1 if p != a]
            d, e = [p for p in t2 if p != a]
            for x, y, x2, y2 in ((b, d, c, e), (b, e, c, d)):
                f = third[x][y]
                if f and f == third[x2][y2] and f not in (a, b, c, d, e):
                    found.add(frozenset((t1, t2, _triple((x, y, f)), _triple((x2, y2, f)))))
    return found


def pasch_degrees(S: SteinerTripleSystem) -> list[int]:
    """Number of Pasch configurations through each point (index 0 unused)."""
    deg = [0] * (S.order + 1)
    for conf in pasch_configurations(S):
        for p in set().union(*conf):
            deg[p] += 1
    return deg


@dataclass(frozen=True)
class Invariants:
    order: int
    triple_count: int
    pasch_count: int
    pasch_degree_multiset: tuple[tuple[int, int], ...]


def invariants(S: SteinerTripleSystem) -> Invariants:
    deg = pasch_degrees(S)[1:]
    return Invariants(
        S.order,
        len(S.triples),
        len(pasch_configurations(S)),
        tuple(sorted(Counter(deg).items())),
    )


# --- isomorphism search -------------------------------------------------------------

def isomorphisms(
    A: SteinerTripleSystem,
    B: SteinerTripleSystem,
    use_invariants: bool = True,
) -> Iterator[Permutation]:
    """All bijections p with p(A) == B, in a deterministic order.

    Points of A are fixed in order of (Pasch degree, index) and tried against
    points of B with the same degree.  Every pair of mapped points forces the
    image of its third point, which prunes contradictory branches early.
    """
    n = A.order
    if B.order != n or len(A.triples) != len(B.triples):
        return
    if use_invariants:
        da, db = pasch_degrees(A), pasch_degrees(B)
        if sorted(da[1:]) != sorted(db[1:]):
            return
    else:
        da = db = [0] * (n + 1)
    ta, tb = A.third_table, B.third_table
    order = sorted(range(1, n + 1), key=lambda p: (da[p], p))
    f = [0] * (n + 1)
    finv = [0] * (n + 1)
    mapped: list[int] = []

    def assign(p: int, q: int) -> bool:
        """Map p -> q and close under forced thirds; leaves trail in ``mapped``."""
        f[p], finv[q] = q, p
        mapped.append(p)
        head = len(mapped) - 1
        while head < len(mapped):
            x = mapped[head]
            fx = f[x]
            head += 1
            for r in mapped[:head - 1]:
                c = ta[x][r]
                d = tb[fx][f[r]]
                if f[c]:
                    if f[c] != d:
                        return False
                elif finv[d] or da[c] != db[d]:
                    return False
                else:
                    f[c], finv[d] = d, c
                    mapped.append(c)
        return True

    def undo(mark: int) -> None:
        while len(mapped) > mark:
            p = mapped.pop()
            finv[f[p]] = 0
            f[p] = 0

    def search() -> Iterator[Permutation]:
        nxt = next((p for p in order if not f[p]), 0)
        if not nxt:
            yield Permutation(tuple(f[1:]))
            return
        for q in range(1, n + 1):
            if finv[q] or da[nxt] != db[q]:
                continue
            mark = len(mapped)
            if assign(nxt, q):
                yield from search()
            undo(mark)

    yield from search()


def are_isomorphic(
    A: SteinerTripleSystem, B: SteinerTripleSystem, use_invariants: bool = True
) -> Permutation | None:
    """A witness p with apply_perm(p, A) == B, or None."""
    if A.order != B.order:
        return None
    if use_invariants and invariants(A) != invariants(B):
        return None
    return next(isomorphisms(A, B, use_invariants), None)
