"""Plain-text file formats for codes, lambda functions, triple systems,
theta functions and permutations.  Coordinates are 1-based throughout."""

from __future__ import annotations

from pathlib import Path
from typing import Callable

from .core import Code, ExplicitCode, word_from_str, word_to_str
from .perm import Permutation
from .sts import STSError, SteinerTripleSystem, ThetaFn, Triple
from .vasiliev import ExplicitLambda, LambdaDomainError, LambdaFn


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _header(line: str, key: str) -> str:
    k, sep, v = line.partition("=")
    if not sep or k.strip() != key:
        raise FormatError(f"expected header '{key}=...', got {line!r}")
    return v.strip()


# --- codes -------------------------------------------------------------------

def dumps_code(code: Code) -> str:
    lines = sorted(word_to_str(w, code.n) for w in code)
    return "\n".join([f"n={code.n}", *lines]) + "\n"


def loads_code(text: str) -> ExplicitCode:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty code file")
    try:
        n = int(_header(lines[0], "n"))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    seen = set()
    words = []
    for k, ln in enumerate(lines[1:], 2):
        if len(ln) != n:
            raise FormatError(f"line {k}: word has length {len(ln)}, expected {n}")
        if ln in seen:
            raise FormatError(f"line {k}: duplicate word {ln}")
        seen.add(ln)
        try:
            words.append(word_from_str(ln))
        except ValueError as exc:
            raise FormatError(f"line {k}: {exc}") from None
    return ExplicitCode(n, words)


def write_code(path, code: Code) -> None:
    Path(path).write_text(dumps_code(code), encoding="utf-8")


def read_code(path) -> ExplicitCode:
    return loads_code(Path(path).read_text(encoding="utf-8"))


# --- lambda --------------------------------------------------------------------

def dumps_lambda(lam: LambdaFn, base_ref: str) -> str:
    n = lam.base.n
    lines = sorted(f"{word_to_str(y, n)} {lam(y)}" for y in lam.base)
    return "\n".join([f"base={base_ref}", *lines]) + "\n"


def loads_lambda(text: str, resolve_base: Callable[[str], Code]) -> ExplicitLambda:
    """Parse a lambda file; ``resolve_base`` turns the header reference into a code."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty lambda file")
    base = resolve_base(_header(lines[0], "base"))
    values: dict[int, int] = {}
    for k, ln in enumerate(lines[1:], 2):
        parts = ln.split()
        if len(parts) != 2 or parts[1] not in ("0", "1") or len(parts[0]) != base.n:
            raise FormatError(f"line {k}: expected '<{base.n}-bit word> <bit>', got {ln!r}")
        y = word_from_str(parts[0])
        if y in values:
            raise FormatError(f"line {k}: word listed twice")
        values[y] = int(parts[1])
    try:
        return ExplicitLambda(base, values)
    except LambdaDomainError as exc:
        raise FormatError(str(exc)) from None


def write_lambda(path, lam: LambdaFn, base_ref: str) -> None:
    Path(path).write_text(dumps_lambda(lam, base_ref), encoding="utf-8")


def read_lambda(path, resolve_base: Callable[[str], Code]) -> ExplicitLambda:
    path = Path(path)

    def resolve(ref: str) -> Code:
        cand = path.parent / ref
        return resolve_base(str(cand) if cand.exists() else ref)

    return loads_lambda(path.read_text(encoding="utf-8"), resolve)


# --- triple systems ---------------------------------------------------------------

def dumps_sts(S: SteinerTripleSystem) -> str:
    return "\n".join([f"order={S.order}", *("%d %d %d" % t for t in S)]) + "\n"


def _parse_triple(ln: str, k: int) -> Triple:
    try:
        a, b, c = (int(x) for x in ln.split()[:3])
    except ValueError:
        raise FormatError(f"line {k}: expected three coordinates, got {ln!r}") from None
    if not a < b < c:
        raise FormatError(f"line {k}: coordinates must be ascending")
    return a, b, c


def loads_sts(text: str) -> SteinerTripleSystem:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty STS file")
    try:
        order = int(_header(lines[0], "order"))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    triples = []
    for k, ln in enumerate(lines[1:], 2):
        if len(ln.split()) != 3:
            raise FormatError(f"line {k}: expected 'i j k', got {ln!r}")
        triples.append(_parse_triple(ln, k))
    if len(set(triples)) != len(triples):
        raise FormatError("duplicate triple")
    try:
        return SteinerTripleSystem.from_triples(order, triples)
    except STSError as exc:
        raise FormatError(f"not a Steiner triple system: {exc}") from None


def write_sts(path, S: SteinerTripleSystem) -> None:
    Path(path).write_text(dumps_sts(S), encoding="utf-8")


def read_sts(path) -> SteinerTripleSystem:
    return loads_sts(Path(path).read_text(encoding="utf-8"))


def dumps_theta(theta: ThetaFn) -> str:
    return "\n".join("%d %d %d %d" % (*t, theta(t)) for t in theta.base) + "\n"


def loads_theta(text: str, base: SteinerTripleSystem) -> ThetaFn:
    values = {}
    for k, ln in enumerate(_lines(text), 1):
        parts = ln.split()
        if len(parts) != 4 or parts[3] not in ("0", "1"):
            raise FormatError(f"line {k}: expected 'i j k <bit>', got {ln!r}")
        t = _parse_triple(ln, k)
        if t in values:
            raise FormatError(f"line {k}: triple listed twice")
        values[t] = int(parts[3])
    try:
        return ThetaFn(base, values)
    except STSError as exc:
        raise FormatError(str(exc)) from None


def read_theta(path, base: SteinerTripleSystem) -> ThetaFn:
    return loads_theta(Path(path).read_text(encoding="utf-8"), base)


# --- permutations -------------------------------------------------------------------

def dumps_perm(p: Permutation) -> str:
    return f"degree={p.degree}\n" + " ".join(map(str, p.images)) + "\n"


def loads_perm(text: str) -> Permutation:
    lines = _lines(text)
    if len(lines) != 2:
        raise FormatError("permutation file needs a header and one line of images")
    degree = int(_header(lines[0], "degree"))
    try:
        images = tuple(int(x) for x in lines[1].split())
    except ValueError:
        raise FormatError("images must be integers") from None
    if len(images) != degree:
        raise FormatError(f"expected {degree} images, got {len(images)}")
    try:
        return Permutation(images)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
