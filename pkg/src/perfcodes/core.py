"""Binary words, code containers and the GF(2) machinery built on them.

Words are plain Python ints used as bitsets: coordinate ``i`` (1-based, as in
every public interface of this package) lives in bit ``i - 1``.  A code always
knows its length ``n``; the words themselves do not carry one.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_LENGTH = 63
# codes up to this length get a dense membership table when enumerated
LUT_MAX_LENGTH = 24
FULL_COVER_MAX_LENGTH = 15


class DimensionMismatch(ValueError):
    pass


class NotASubcode(ValueError):
    pass


# --- words -----------------------------------------------------------------

def mask(n: int) -> int:
    return (1 << n) - 1


def word(support: Iterable[int]) -> int:
    """Word with the given 1-based support."""
    w = 0
    for i in support:
        if i < 1:
            raise ValueError(f"coordinates are 1-based, got {i}")
        w |= 1 << (i - 1)
    return w


def support(w: int) -> tuple[int, ...]:
    out = []
    i = 1
    while w:
        if w & 1:
            out.append(i)
        w >>= 1
        i += 1
    return tuple(out)


def weight(w: int) -> int:
    return w.bit_count()


def parity(w: int) -> int:
    return w.bit_count() & 1


def dot(u: int, y: int) -> int:
    """Inner product mod 2."""
    return (u & y).bit_count() & 1


def distance(x: int, y: int) -> int:
    return (x ^ y).bit_count()


def word_to_str(w: int, n: int) -> str:
    """0/1 string, character ``i - 1`` is coordinate ``i``."""
    return "".join("1" if (w >> i) & 1 else "0" for i in range(n))


def word_from_str(s: str) -> int:
    s = s.strip()
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a 0/1 word: {s!r}")
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


def fmt_support(w: int) -> str:
    return "{" + ", ".join(map(str, support(w))) + "}"


# --- GF(2) elimination -----------------------------------------------------

class EchelonBasis:
    """Incrementally maintained reduced basis, keyed by pivot bit."""

    def __init__(self, vectors: Iterable[int] = ()):
        self.rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        rows = self.rows
        while v:
            top = v.bit_length() - 1
            r = rows.get(top)
            if r is None:
                return v
            v ^= r
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.rows)

    def basis(self) -> list[int]:
        return [self.rows[k] for k in sorted(self.rows)]


def gf2_rank(vectors: Iterable[int]) -> int:
    return len(EchelonBasis(vectors))


def enumerate_span(basis: Sequence[int]) -> Iterator[int]:
    """All 2^k combinations of an independent basis, Gray-code order."""
    v = 0
    yield v
    for m in range(1, 1 << len(basis)):
        v ^= basis[(m & -m).bit_length() - 1]
        yield v


# --- codes -----------------------------------------------------------------

class Code:
    """A reduced binary code of length ``n`` with a membership oracle.

    Every subclass exposes a decomposition ``code = span(period_basis()) +
    coset_reps()``: the periods span a linear subcode of the kernel and the
    representatives pick one word per coset of it.  Structured checks (rank,
    lifted kernels, equivalence tests at length 31) work from this instead of
    enumerating the whole code.
    """

    n: int

    def __contains__(self, w: int) -> bool:
        raise NotImplementedError

    def __iter__(self) -> Iterator[int]:
        raise NotImplementedError

    def __len__(self) -> int:
        raise NotImplementedError

    def period_basis(self) -> list[int]:
        raise NotImplementedError

    def coset_reps(self) -> list[int]:
        raise NotImplementedError

    @property
    def enumerable(self) -> bool:
        return len(self) <= 1 << 16

    @cached_property
    def word_set(self) -> frozenset[int]:
        return frozenset(self)

    @cached_property
    def word_array(self) -> np.ndarray:
        return np.fromiter(sorted(self.word_set), dtype=np.int64, count=len(self))

    @cached_property
    def lut(self) -> np.ndarray:
        """Dense boolean membership table over F^n."""
        if self.n > LUT_MAX_LENGTH:
            raise ValueError(f"no dense table for length {self.n}")
        table = np.zeros(1 << self.n, dtype=bool)
        table[self.word_array] = True
        return table

    def sample(self, k: int, rng: random.Random) -> list[int]:
        """``k`` codewords drawn uniformly (with replacement)."""
        basis = self.period_basis()
        reps = self.coset_reps()
        out = []
        for _ in range(k):
            w = rng.choice(reps)
            m = rng.getrandbits(len(basis)) if basis else 0
            for j, b in enumerate(basis):
                if (m >> j) & 1:
                    w ^= b
            out.append(w)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        if self is other:
            return True
        return self.n == other.n and len(self) == len(other) and self.word_set == other.word_set

    def __hash__(self) -> int:
        return id(self)


class ExplicitCode(Code):
    def __init__(self, n: int, words: Iterable[int]):
        _check_length(n)
        ws = frozenset(words)
        m = mask(n)
        for w in ws:
            if w & ~m:
                raise DimensionMismatch(f"word {w:#x} is longer than {n}")
        self.n = n
        self.__dict__["word_set"] = ws

    def __contains__(self, w: int) -> bool:
        return w in self.word_set

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.word_set))

    def __len__(self) -> int:
        return len(self.word_set)

    def period_basis(self) -> list[int]:
        return self._decomposition[0]

    def coset_reps(self) -> list[int]:
        return self._decomposition[1]

    @cached_property
    def _decomposition(self) -> tuple[list[int], list[int]]:
        ker = kernel(self)
        basis = EchelonBasis(ker).basis()
        return basis, _coset_reps_modulo(self, basis)

    def __repr__(self) -> str:
        return f"ExplicitCode(n={self.n}, size={len(self)})"


class LinearCode(Code):
    """Span of a generator list; never materialised unless asked."""

    def __init__(self, n: int, generators: Iterable[int]):
        _check_length(n)
        gens = list(generators)
        m = mask(n)
        for g in gens:
            if g & ~m:
                raise DimensionMismatch(f"generator {g:#x} is longer than {n}")
        self.n = n
        self._echelon = EchelonBasis(gens)
        self.basis = self._echelon.basis()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __contains__(self, w: int) -> bool:
        return self._echelon.reduce(w) == 0

    def __iter__(self) -> Iterator[int]:
        return enumerate_span(self.basis)

    def __len__(self) -> int:
        return 1 << len(self.basis)

    def period_basis(self) -> list[int]:
        return list(self.basis)

    def coset_reps(self) -> list[int]:
        return [0]

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, dim={self.dimension})"


def _check_length(n: int) -> None:
    if not 1 <= n <= MAX_LENGTH:
        raise ValueError(f"length must be in 1..{MAX_LENGTH}, got {n}")


def _coset_reps_modulo(code: Code, periods: Sequence[int]) -> list[int]:
    """One representative per coset of span(periods), reps reduced modulo it."""
    ech = EchelonBasis(periods)
    seen = set()
    reps = []
    for w in code:
        r = ech.reduce(w)
        if r not in seen:
            seen.add(r)
            reps.append(r)
    return sorted(reps)


# --- operations ------------------------------------------------------------

def span(generators: Sequence[int], n: int) -> ExplicitCode:
    """GF(2) linear closure of ``generators`` as an explicit code."""
    m = mask(n)
    for g in generators:
        if g & ~m:
            raise DimensionMismatch(f"generator {fmt_support(g)} does not fit length {n}")
    basis = EchelonBasis(generators).basis()
    if len(basis) > 20:
        raise ValueError("span too large to enumerate, use LinearCode")
    return ExplicitCode(n, enumerate_span(basis))


def rank(code: Code) -> int:
    """Dimension of the linear span of the codewords."""
    # span(C) = span(periods + reps) since C = span(periods) + reps and 0 is in C
    return gf2_rank([*code.period_basis(), *code.coset_reps()])


def rank_by_enumeration(code: Code) -> int:
    ech = EchelonBasis()
    for w in code:
        ech.add(w)
        if len(ech) == code.n:
            break
    return len(ech)


def kernel(code: Code) -> Code:
    """Periods of ``code``: words x in C with x + C = C.

    Enumerable codes are checked by brute force.  For large lazy codes the
    result is the linear subcode spanned by the backing's known periods, which
    is a subgroup of the kernel; see ``kernel_is_exact``.
    """
    if isinstance(code, LinearCode):
        return code
    if not code.enumerable:
        return LinearCode(code.n, code.period_basis())
    words = code.word_array
    periods = []
    if code.n <= LUT_MAX_LENGTH:
        lut = code.lut
        for x in words.tolist():
            if lut[words ^ x].all():
                periods.append(x)
    else:
        ws = code.word_set
        for x in words.tolist():
            if all((x ^ c) in ws for c in ws):
                periods.append(x)
    return ExplicitCode(code.n, periods)


def kernel_is_exact(code: Code) -> bool:
    return isinstance(code, LinearCode) or code.enumerable


def kernel_brute(code: Code) -> list[int]:
    """Independent oracle: |C| membership queries per candidate word."""
    return [x for x in code if all((x ^ c) in code for c in code)]


def weight_distribution(code: Code) -> dict[int, int]:
    return dict(sorted(Counter(w.bit_count() for w in code).items()))


def min_distance(code: Code) -> int:
    """Minimum distance between distinct codewords (0 when |C| < 2)."""
    if len(code) < 2:
        return 0
    if isinstance(code, LinearCode):
        return min(w.bit_count() for w in code if w)
    dense = code.enumerable and code.n <= LUT_MAX_LENGTH
    words = list(code)
    for d in range(1, code.n + 1):
        patterns = [word(s) for s in combinations(range(1, code.n + 1), d)]
        if dense:
            lut, arr = code.lut, code.word_array
            if any(lut[arr ^ p].any() for p in patterns):
                return d
            continue
        for c in words:
            for p in patterns:
                if (c ^ p) in code:
                    return d
    return code.n


def check_perfect(code: Code, samples: int = 256, seed: int = 0) -> tuple[bool, str]:
    """Decide perfectness and name the method that was used.

    Up to length 15 every vector's distance-1 ball is counted exactly.  Beyond
    that the sphere-packing equality |C|(n+1) = 2^n is checked together with
    distance >= 3 around sampled codewords.
    """
    n = code.n
    if (n + 1) & n or n < 3:
        return False, "length is not 2^k - 1"
    if len(code) * (n + 1) != 1 << n:
        return False, "cardinality differs from 2^n/(n+1)"
    if n <= FULL_COVER_MAX_LENGTH:
        words = code.word_array
        hits = np.zeros(1 << n, dtype=np.int64)
        np.add.at(hits, words, 1)
        for i in range(n):
            np.add.at(hits, words ^ (1 << i), 1)
        return bool((hits == 1).all()), "full ball cover"
    rng = random.Random(seed)
    low = [1 << i for i in range(n)] + [(1 << i) | (1 << j) for i, j in combinations(range(n), 2)]
    for c in code.sample(samples, rng):
        if c not in code:
            return False, "sampled word failed membership"
        if any((c ^ e) in code for e in low):
            return False, "codeword at distance < 3 from a sampled codeword"
    return True, f"sphere-packing cardinality + distance>=3 around {samples} sampled codewords"


def is_perfect(code: Code) -> bool:
    return check_perfect(code)[0]


def coset_representatives(code: Code, subcode: Code) -> list[int]:
    """One word of ``code`` per coset of the linear ``subcode``."""
    if subcode.n != code.n:
        raise DimensionMismatch("codes of different lengths")
    gens = subcode.basis if isinstance(subcode, LinearCode) else EchelonBasis(subcode).basis()
    for g in gens:
        if g not in code:
            raise NotASubcode(f"{fmt_support(g)} is not a codeword")
    ech = EchelonBasis(gens)
    if len(subcode) != 1 << len(ech):
        raise NotASubcode("subcode is not linear")
    seen: dict[int, int] = {}
    for w in code:
        seen.setdefault(ech.reduce(w), w)
    reps = sorted(seen.values())
    # coset closure: every rep + subcode must lie in the code
    if len(reps) * len(subcode) != len(code):
        raise NotASubcode("subcode cosets do not tile the code")
    return reps


# --- Hamming codes ---------------------------------------------------------

def hamming(n: int) -> LinearCode:
    """Hamming code whose parity-check columns are the binary expansions of 1..n."""
    if n < 3 or (n + 1) & n:
        raise ValueError(f"Hamming length must be 2^k - 1 with k > 1, got {n}")
    gens = []
    for i in range(1, n + 1):
        if i & (i - 1):
            gens.append(word([i, *(1 << b for b in range(i.bit_length()) if (i >> b) & 1)]))
    return LinearCode(n, gens)


H7_GENERATORS = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6))


def hamming7_paper() -> LinearCode:
    return LinearCode(7, [word(s) for s in H7_GENERATORS])


# --- statistics ------------------------------------------------------------

@dataclass(frozen=True)
class CodeStats:
    n: int
    size: int
    rank: int
    kernel_size: int
    kernel_exact: bool
    min_distance: int
    is_perfect: bool
    perfect_method: str
    weight_distribution: dict[int, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "rank": self.rank,
            "kernel": self.kernel_size,
            "kernel_exact": self.kernel_exact,
            "min_distance": self.min_distance,
            "is_perfect": self.is_perfect,
            "perfect_method": self.perfect_method,
            "weight_distribution": {str(k): v for k, v in self.weight_distribution.items()},
        }


def code_stats(code: Code) -> CodeStats:
    perfect, method = check_perfect(code)
    enumerable = code.enumerable
    if enumerable:
        dmin = min_distance(code)
        wd = weight_distribution(code)
    else:
        dmin = 3 if perfect else -1
        wd = {}
    return CodeStats(
        n=code.n,
        size=len(code),
        rank=rank(code),
        kernel_size=len(kernel(code)),
        kernel_exact=kernel_is_exact(code),
        min_distance=dmin,
        is_perfect=perfect,
        perfect_method=method,
        weight_distribution=wd,
    )


def log2_size(code: Code) -> int:
    return int(math.log2(len(code)))
