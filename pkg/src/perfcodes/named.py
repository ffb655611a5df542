"""Named codes and lambda functions, built in-process from their definitions."""

from __future__ import annotations

import re
from functools import lru_cache
from pathlib import Path

from .core import Code, hamming, hamming7_paper
from .formats import read_code, read_lambda
from .vasiliev import LambdaFn, lambda_lift, lambda_named, vasiliev_construct

LAMBDA_NAMES = ("V22_1", "V3_11", "zero")

CODE_NAMES = (
    "hamming7_paper",
    "hamming15",
    "hamming31",
    "V22_1",
    "V3_11",
    "V22_1_doubled",
    "V3_11_doubled",
    "V22_1_lifted",
    "V3_11_lifted",
)


@lru_cache(maxsize=None)
def h7() -> Code:
    return hamming7_paper()


@lru_cache(maxsize=None)
def named_lambda(name: str) -> LambdaFn:
    return lambda_named(name, h7())


@lru_cache(maxsize=None)
def named_code(name: str) -> Code:
    """Resolve a code name; ``hamming<n>`` gives the standard Hamming code."""
    if name == "hamming7_paper":
        return h7()
    if name == "hamming15":
        return vasiliev_construct(h7())
    if name == "hamming31":
        return vasiliev_construct(named_code("hamming15"))
    if name in ("V22_1", "V3_11"):
        return vasiliev_construct(h7(), named_lambda(name))
    m = re.fullmatch(r"(V22_1|V3_11)_doubled", name)
    if m:
        return vasiliev_construct(named_code(m.group(1)))
    m = re.fullmatch(r"(V22_1|V3_11)_lifted", name)
    if m:
        lam = lambda_lift(named_lambda(m.group(1)), 1)
        return vasiliev_construct(lam.base, lam)
    m = re.fullmatch(r"hamming(\d+)", name)
    if m:
        return hamming(int(m.group(1)))
    raise KeyError(f"unknown code {name!r}; known names: {', '.join(CODE_NAMES)}")


def resolve_code(selector: str) -> Code:
    """A code name or a path to a code file."""
    try:
        return named_code(selector)
    except KeyError:
        if Path(selector).exists():
            return read_code(selector)
        raise


def resolve_lambda(selector: str) -> LambdaFn:
    """A lambda name or a path to a lambda file."""
    if selector in LAMBDA_NAMES:
        return named_lambda(selector)
    if Path(selector).exists():
        return read_lambda(selector, resolve_code)
    raise KeyError(f"unknown lambda {selector!r}; known names: {', '.join(LAMBDA_NAMES)}")
