"""The Vasiliev doubling, its lambda functions and coordinate components.

A length-(2n+1) word is laid out as ``(a, b, c)``: coordinates ``1..n`` hold
``a``, coordinate ``n + 1`` holds the bit ``b`` and ``n + 2..2n + 1`` hold ``c``.
The Vasiliev code of a base code C and a lambda function is

    {(x + y, |x| + lambda(y), x) : x in F^n, y in C}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Mapping

from .core import (
    Code,
    DimensionMismatch,
    EchelonBasis,
    LinearCode,
    _coset_reps_modulo,
    check_perfect,
    enumerate_span,
    fmt_support,
    hamming,
    hamming7_paper,
    mask,
    parity,
    word,
)
from .perm import Permutation


class LambdaDomainError(ValueError):
    pass


class MalformedTower(ValueError):
    pass


class ComponentOutsideBase(ValueError):
    pass


def split(v: int, m: int) -> tuple[int, int, int]:
    """Blocks ``(a, b, c)`` of a length-(2m+1) word."""
    return v & mask(m), (v >> m) & 1, v >> (m + 1)


def join(a: int, b: int, c: int, m: int) -> int:
    return a | (b << m) | (c << (m + 1))


# --- lambda functions ------------------------------------------------------

class LambdaFn:
    """Boolean function on the words of a base code, vanishing at zero."""

    base: Code

    def __call__(self, y: int) -> int:
        raise NotImplementedError

    def balance(self) -> tuple[int, int]:
        """(zeros, ones) over the base."""
        ones = sum(self(y) for y in self.base)
        return len(self.base) - ones, ones

    def periods(self) -> list[int]:
        """Generators of a linear space P inside Ker(base) on which
        lambda(y + p) = lambda(y) + lambda(p) holds for every base word y."""
        raise NotImplementedError

    def is_zero(self) -> bool:
        return False


class ExplicitLambda(LambdaFn):
    def __init__(self, base: Code, values: Mapping[int, int]):
        words = base.word_set
        vals = {int(k): int(v) & 1 for k, v in values.items()}
        if vals.keys() != words:
            missing = len(words - vals.keys())
            extra = len(vals.keys() - words)
            raise LambdaDomainError(f"lambda domain differs from base: {missing} missing, {extra} extra")
        if vals[0] != 0:
            raise LambdaDomainError("lambda(0) must be 0")
        self.base = base
        self.values = vals

    def __call__(self, y: int) -> int:
        return self.values[y]

    def zero_set(self) -> frozenset[int]:
        return frozenset(y for y, v in self.values.items() if v == 0)

    def is_zero(self) -> bool:
        return not any(self.values.values())

    @cached_property
    def _periods(self) -> list[int]:
        vals = self.values
        ech = EchelonBasis()
        for p, lp in vals.items():
            if p in ech:
                continue
            if all(vals.get(y ^ p, -1) == v ^ lp for y, v in vals.items()):
                ech.add(p)
        return ech.basis()

    def periods(self) -> list[int]:
        return list(self._periods)


class ZeroLambda(LambdaFn):
    def __init__(self, base: Code):
        self.base = base

    def __call__(self, y: int) -> int:
        return 0

    def balance(self) -> tuple[int, int]:
        return len(self.base), 0

    def periods(self) -> list[int]:
        return self.base.period_basis()

    def is_zero(self) -> bool:
        return True


class LiftedLambda(LambdaFn):
    """One level of the recursive lift: on the code vasiliev(H, 0) of length
    2m+1, ``v = (a, b, c)`` is sent to ``inner(a + c)``.

    The value is therefore constant on cosets of the full parity component and
    agrees with ``inner`` on the words ``(y, 0, 0)``.
    """

    def __init__(self, inner: LambdaFn):
        self.inner = inner
        self.base = VasilievCode(inner.base, ZeroLambda(inner.base))
        self._m = inner.base.n
        self._mask = mask(self._m)

    def __call__(self, v: int) -> int:
        m = self._m
        return self.inner((v & self._mask) ^ (v >> (m + 1)))

    def balance(self) -> tuple[int, int]:
        z, o = self.inner.balance()
        r = 1 << self._m
        return z * r, o * r

    def periods(self) -> list[int]:
        m = self._m
        return [*full_parity_generators(m), *self.inner.periods()]

    @property
    def levels(self) -> int:
        inner = self.inner
        return 1 + (inner.levels if isinstance(inner, LiftedLambda) else 0)


def lambda_from_zero_set(base: Code, zeros) -> ExplicitLambda:
    zs = {z if isinstance(z, int) else word(z) for z in zeros}
    if not zs <= base.word_set:
        raise LambdaDomainError("zero set contains non-codewords")
    return ExplicitLambda(base, {y: 0 if y in zs else 1 for y in base})


LAMBDA_ZEROS = {
    "V22_1": [(), (1, 6, 7), (1, 3, 5, 7), (1, 2, 3, 4, 5, 6, 7)],
    "V3_11": [(), (1, 6, 7), (2, 4, 6), (4, 5, 6, 7)],
}


def lambda_named(name: str, base: Code | None = None) -> ExplicitLambda:
    """The named lambda functions on the length-7 Hamming code."""
    base = hamming7_paper() if base is None else base
    if name == "zero":
        return ExplicitLambda(base, {y: 0 for y in base})
    try:
        zeros = LAMBDA_ZEROS[name]
    except KeyError:
        raise KeyError(f"unknown lambda {name!r}; choose from zero, {', '.join(LAMBDA_ZEROS)}") from None
    return lambda_from_zero_set(base, zeros)


def lambda_lift(lam: LambdaFn, levels: int) -> LambdaFn:
    """``levels``-fold lift of a lambda on a Hamming code.

    The base tower is H^{2m+1} := vasiliev(H^m, 0), so the result lives on a
    Hamming code of length 2^levels (n + 1) - 1.
    """
    if levels < 1:
        raise ValueError("levels must be >= 1")
    base = lam.base
    if not isinstance(lam, LiftedLambda):
        if not isinstance(base, LinearCode) or not check_perfect(base)[0]:
            raise MalformedTower("lambda must live on a linear perfect (Hamming) code")
    out = lam
    for _ in range(levels):
        out = LiftedLambda(out)
    return out


def lambda_lift_by_cosets(lam: LambdaFn) -> dict[int, int]:
    """Reference one-level lift built from its coset definition: the value at
    ``(y, 0^{m+1}) + r`` is ``lam(y)`` for every r in the full parity component."""
    m = lam.base.n
    comp = list(enumerate_span(full_parity_generators(m)))
    table: dict[int, int] = {}
    for y in lam.base:
        v = lam(y)
        for r in comp:
            w = y ^ r
            if table.setdefault(w, v) != v:
                raise AssertionError("coset definition is inconsistent")
    return table


def is_linear_lambda(lam: LambdaFn) -> bool:
    return linearity_violation(lam) is None


def linearity_violation(lam: LambdaFn) -> tuple[int, int] | None:
    """A pair (y, y') with lambda(y + y') != lambda(y) + lambda(y'), if any."""
    base = lam.base
    if not _closed(base):
        raise ValueError("linearity is only defined over a linear base")
    if len(base) <= 1 << 8:
        words = list(base)
        for y in words:
            for y2 in words:
                if lam(y ^ y2) != lam(y) ^ lam(y2):
                    return y, y2
        return None
    basis = EchelonBasis(base.period_basis()).basis()
    vals = [lam(b) for b in basis]
    v, expect = 0, 0
    for k in range(1, 1 << len(basis)):
        j = (k & -k).bit_length() - 1
        v ^= basis[j]
        expect ^= vals[j]
        if lam(v) != expect:
            # v is a sum of basis words; split off the last one
            return v ^ basis[j], basis[j]
    return None


def lambda_balance(lam: LambdaFn) -> tuple[int, int]:
    return lam.balance()


# --- components ------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    anchor: int
    code: LinearCode
    trivial: bool = False

    def __iter__(self) -> Iterator[int]:
        return iter(self.code)

    def __len__(self) -> int:
        return len(self.code)

    def __contains__(self, w: int) -> bool:
        return w in self.code


def triples_through(code: Code, i: int) -> list[int]:
    """Weight-3 codewords whose support contains ``i``."""
    n = code.n
    others = [j for j in range(1, n + 1) if j != i]
    return [w for j, k in combinations(others, 2) if (w := word((i, j, k))) in code]


def i_component(code: Code, i: int) -> Component:
    """Span of the weight-3 codewords through coordinate ``i``."""
    if not 1 <= i <= code.n:
        raise ValueError(f"coordinate {i} outside 1..{code.n}")
    gens = triples_through(code, i)
    return Component(i, LinearCode(code.n, gens), trivial=not gens)


def full_parity_generators(n: int) -> list[int]:
    return [(1 << (i - 1)) | (1 << n) | (1 << (i + n)) for i in range(1, n + 1)]


def full_parity_component(n: int) -> Component:
    """The words (x, |x|, x) of length 2n+1."""
    return Component(n + 1, LinearCode(2 * n + 1, full_parity_generators(n)))


def is_piercing(lam: LambdaFn, comp: Component) -> bool:
    """True iff lambda takes both values on the component."""
    base = lam.base
    if comp.code.n != base.n:
        raise ComponentOutsideBase("component length differs from the base")
    if isinstance(base, (LinearCode, VasilievCode)) and _closed(base):
        outside = [g for g in comp.code.basis if g not in base]
    else:
        outside = [w for w in comp if w not in base]
    if outside:
        raise ComponentOutsideBase(f"{fmt_support(outside[0])} is not a base codeword")
    if comp.trivial:
        return False
    seen = set()
    for w in comp:
        seen.add(lam(w))
        if len(seen) == 2:
            return True
    return False


def _closed(code: Code) -> bool:
    """Whether membership of generators implies membership of their span."""
    if isinstance(code, LinearCode):
        return True
    return isinstance(code, VasilievCode) and code.lam.is_zero() and _closed(code.base)


# --- the construction --------------------------------------------------------

class VasilievCode(Code):
    def __init__(self, base: Code, lam: LambdaFn):
        if lam.base is not base and (lam.base.n != base.n or lam.base != base):
            raise LambdaDomainError("lambda is defined on a different base code")
        self.base = base
        self.lam = lam
        self.m = base.n
        self.n = 2 * base.n + 1
        self._mask = mask(self.m)

    def __contains__(self, v: int) -> bool:
        m = self.m
        if v >> self.n:
            return False
        a = v & self._mask
        c = v >> (m + 1)
        y = a ^ c
        if y not in self.base:
            return False
        return ((v >> m) & 1) == (c.bit_count() & 1) ^ self.lam(y)

    def __iter__(self) -> Iterator[int]:
        m = self.m
        lam = self.lam
        xs = [(x, (x.bit_count() & 1) << m, x << (m + 1)) for x in range(1 << m)]
        for y in self.base:
            ly = lam(y) << m
            for x, px, cx in xs:
                yield (x ^ y) | (px ^ ly) | cx

    def __len__(self) -> int:
        return len(self.base) << self.m

    def lift(self, y: int) -> int:
        """The word (y, lambda(y), 0)."""
        return y | (self.lam(y) << self.m)

    def reduce(self, z: int) -> int:
        """Base word y with z in (y, lambda(y), 0) + R."""
        a, _, c = split(z, self.m)
        return a ^ c

    def period_basis(self) -> list[int]:
        m = self.m
        lam = self.lam
        return [*full_parity_generators(m), *(p | (lam(p) << m) for p in lam.periods())]

    def coset_reps(self) -> list[int]:
        return [self.lift(q) for q in self.base_reps()]

    def base_reps(self) -> list[int]:
        """Base words, one per coset of the lambda periods."""
        return list(self._base_reps)

    @cached_property
    def _base_reps(self) -> tuple[int, ...]:
        base = self.base
        lp = self.lam.periods()
        bp = base.period_basis()
        ech_b = EchelonBasis(bp)
        if all(p in ech_b for p in lp):
            ech_l = EchelonBasis(lp)
            extra = [b for b in bp if ech_l.add(b)]
            red = EchelonBasis(lp).reduce
            reps = {red(q ^ c) for q in base.coset_reps() for c in enumerate_span(extra)}
            return tuple(sorted(reps))
        return tuple(_coset_reps_modulo(base, lp))

    def __repr__(self) -> str:
        return f"VasilievCode(n={self.n}, base={self.base!r})"


def vasiliev_construct(base: Code, lam: LambdaFn | None = None) -> VasilievCode:
    return VasilievCode(base, ZeroLambda(base) if lam is None else lam)


def hamming_tower(n: int, levels: int) -> Code:
    """H^n doubled ``levels`` times with the zero lambda."""
    code: Code = hamming7_paper() if n == 7 else hamming(n)
    for _ in range(levels):
        code = vasiliev_construct(code)
    return code


# --- equivalence of doubled and lifted Vasiliev codes ------------------------

def block_rotation(n: int) -> Permutation:
    """Coordinate map sending vasiliev(vasiliev(H^n, lam), 0) onto
    vasiliev(vasiliev(H^n, 0), lift(lam)), both of length 4n + 3.

    Coordinates 1..n are fixed and the three (n+1)-blocks starting at
    n + 1, 2n + 2 and 3n + 3 are rotated cyclically by n + 1 positions.
    """
    N = 4 * n + 3
    img = list(range(1, N + 1))
    b = n + 1
    for off in range(b):
        p1, p2, p3 = b + off, 2 * b + off, 3 * b + off
        img[p1 - 1], img[p2 - 1], img[p3 - 1] = p2, p3, p1
    return Permutation(tuple(img))


def printed_phi(n: int) -> Permutation:
    """The three-cycle product taken literally: cycles (n+i, 3n+2+i, 2n+2+i)
    for i = 0..n, composed right to left (the cycles overlap)."""
    return Permutation.from_cycles(
        4 * n + 3, [(n + i, 3 * n + 2 + i, 2 * n + 2 + i) for i in range(n + 1)]
    )


class Inconclusive(RuntimeError):
    pass


def maps_onto(perm: Permutation, a: Code, b: Code, samples: int = 2000, seed: int = 0) -> bool:
    """Decide ``perm(a) == b`` from the period/representative decompositions.

    Images of a's periods must lie in the span of b's periods and images of a's
    representatives in b; with |a| == |b| this proves equality.  When the span
    test fails a random sample is used to look for a refuting word.
    """
    import random

    if perm.degree != a.n or a.n != b.n or len(a) != len(b):
        return False
    ap = perm.apply_word
    ech = EchelonBasis(b.period_basis())
    if not all(ap(r) in b for r in a.coset_reps()):
        return False
    if all(ap(p) in ech for p in a.period_basis()):
        return True
    if a.enumerable:
        return all(ap(w) in b for w in a)
    rng = random.Random(seed)
    if any(ap(w) not in b for w in a.sample(samples, rng)):
        return False
    raise Inconclusive("periods do not map into b's known periods and no refuting sample was found")
