"""Command-line front end.

Exit codes: 0 when the checked property holds, 1 when it is computed false,
2 for usage or input errors and for checks the given code cannot support.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stdout
from dataclasses import dataclass
from pathlib import Path

from .core import code_stats, hamming, word_from_str
from .formats import (
    FormatError,
    dumps_code,
    dumps_lambda,
    dumps_sts,
    read_sts,
    read_theta,
)
from .groups import (
    GroupTooLarge,
    LinearLambdaError,
    ReductionNotApplicable,
    UnsupportedCode,
    is_homogeneous,
    is_transitive,
    order_identity_check,
    transitivity_reduction,
)
from .named import named_code, resolve_code, resolve_lambda
from .reports import Report
from .sts import NotACodeword, STSError, ThetaFn, am_doubling, neighborhood_sts
from .vasiliev import LambdaDomainError, MalformedTower, vasiliev_construct

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2

CHECKS = ("analyze", "homogeneity", "transitivity", "reduction", "identity")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    action: str | None = None
    code: str | None = None
    lam: str | None = None
    base: str | None = None
    sts: str | None = None
    theta: str | None = None
    word: str | None = None
    n: int | None = None
    levels: int = 1
    budget: int = 10**4
    out: str | None = None
    fmt: str = "text"
    only: tuple[str, ...] = ()

    def __post_init__(self):
        if self.budget < 1:
            raise UsageError("--budget must be at least 1")
        if self.levels < 1:
            raise UsageError("--levels must be at least 1")


def _positive(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="perfcodes", description="Perfect binary codes and their symmetry checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, out=True):
        if out:
            sp.add_argument("--out", help="write the result here instead of standard output")
        return sp

    con = sub.add_parser("construct", help="build a code, lambda function or triple system")
    csub = con.add_subparsers(dest="action", required=True)
    common(csub.add_parser("hamming", help="Hamming code of length n")).add_argument("--n", type=_positive, required=True)
    v = common(csub.add_parser("vasiliev", help="vasiliev(base, lambda)"))
    v.add_argument("--base", required=True)
    v.add_argument("--lambda", dest="lam", default="zero")
    d = common(csub.add_parser("doubling", help="doubling of an STS by a theta function"))
    d.add_argument("--sts", required=True)
    d.add_argument("--theta", required=True, help="all-zero, all-one or a theta file")
    s = common(csub.add_parser("sts", help="neighbourhood triple system of a codeword"))
    s.add_argument("--code", required=True)
    s.add_argument("--word", help="codeword as a bit string (default: zero)")
    lam = common(csub.add_parser("lambda", help="write a named lambda as a file"))
    lam.add_argument("--lambda", dest="lam", required=True)

    chk = sub.add_parser("check", help="run a structural check")
    chk.add_argument("action", choices=CHECKS)
    chk.add_argument("--code")
    chk.add_argument("--lambda", dest="lam")
    chk.add_argument("--levels", type=_positive, default=1)
    chk.add_argument("--budget", type=_positive, default=10**4)
    chk.add_argument("--json", dest="fmt", action="store_const", const="json", default="text")
    common(chk)

    rep = sub.add_parser("repro", help="run the reproduction checks")
    rep.add_argument("--only", nargs="+", default=[], metavar="ID")
    rep.add_argument("--json", dest="fmt", action="store_const", const="json", default="text")
    common(rep)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(ns).items() if v is not None and k in RunConfig.__dataclass_fields__}
    if "only" in fields:
        fields["only"] = tuple(fields["only"])
    return RunConfig(**fields)


def _emit(cfg: RunConfig, text: str, summary: str = "") -> None:
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
        if summary:
            print(summary)
    else:
        sys.stdout.write(text)
        if summary:
            print(summary, file=sys.stderr)


def _stats_line(code) -> str:
    st = code_stats(code)
    return (
        f"n={st.n} size={st.size} rank={st.rank} kernel={st.kernel_size}"
        f" d={st.min_distance} perfect={str(st.is_perfect).lower()}"
    )


# --- construct -------------------------------------------------------------------

def cmd_construct(cfg: RunConfig) -> int:
    if cfg.action == "hamming":
        code = hamming(cfg.n)
        _emit(cfg, dumps_code(code), _stats_line(code))
    elif cfg.action == "vasiliev":
        base = resolve_code(cfg.base)
        lam = resolve_lambda(cfg.lam) if cfg.lam != "zero" else None
        if lam is not None and lam.base != base:
            raise UsageError("the lambda function is defined on a different base code")
        code = vasiliev_construct(base, lam)
        if not code.enumerable:
            raise UsageError(f"code of size {len(code)} is too large to write out")
        _emit(cfg, dumps_code(code), _stats_line(code))
    elif cfg.action == "doubling":
        S = read_sts(cfg.sts)
        if cfg.theta in ("all-zero", "all-one"):
            theta = ThetaFn.constant(S, int(cfg.theta == "all-one"))
        else:
            theta = read_theta(cfg.theta, S)
        D = am_doubling(S, theta)
        _emit(cfg, dumps_sts(D), f"order={D.order} triples={len(D)}")
    elif cfg.action == "sts":
        code = resolve_code(cfg.code)
        y = word_from_str(cfg.word) if cfg.word else 0
        S = neighborhood_sts(code, y)
        _emit(cfg, dumps_sts(S), f"order={S.order} triples={len(S)}")
    elif cfg.action == "lambda":
        lam = resolve_lambda(cfg.lam)
        if lam.base != named_code("hamming7_paper"):
            raise UsageError("only lambda functions on hamming7_paper can be written by name")
        zeros, ones = lam.balance()
        _emit(cfg, dumps_lambda(lam, "hamming7_paper"), f"zeros={zeros} ones={ones}")
    return EXIT_OK


# --- check -------------------------------------------------------------------------

def _need(value, flag: str, action: str):
    if value is None:
        raise UsageError(f"check {action} needs {flag}")
    return value


def _analyze(cfg: RunConfig) -> tuple[Report, bool]:
    code = resolve_code(_need(cfg.code, "--code", "analyze"))
    st = code_stats(code)
    d = st.as_dict()
    rep = Report(code_id=cfg.code, sizes={k: d[k] for k in ("n", "size", "rank", "kernel")})
    rep.extra = {k: d[k] for k in d if k not in rep.sizes}
    rep.method_notes.append(f"perfectness by {st.perfect_method}")
    if not st.kernel_exact:
        rep.method_notes.append("kernel is a known period subgroup, possibly smaller than the true kernel")
    return rep, st.is_perfect


def run_check(cfg: RunConfig) -> tuple[Report, bool]:
    a = cfg.action
    if a == "analyze":
        return _analyze(cfg)
    if a == "homogeneity":
        rep = is_homogeneous(resolve_code(_need(cfg.code, "--code", a)), cfg.code, budget=cfg.budget)
        return rep, bool(rep.homogeneous)
    if a == "transitivity":
        rep = is_transitive(resolve_code(_need(cfg.code, "--code", a)), cfg.code)
        return rep, bool(rep.transitive)
    if a == "reduction":
        lam = resolve_lambda(_need(cfg.lam, "--lambda", a))
        rep = transitivity_reduction(lam, cfg.levels, f"{cfg.lam} lifted {cfg.levels}x")
        return rep, bool(rep.transitive)
    if a == "identity":
        rep = order_identity_check(resolve_code(_need(cfg.code, "--code", a)), cfg.code)
        e = rep.extra
        return rep, all(e[k] for k in ("identity_holds", "sym_le_rot", "rot_le_sym_ker"))
    raise UsageError(f"unknown check {a!r}")


def format_report(rep: Report) -> str:
    lines = [f"code: {rep.code_id}"]
    lines.append("sizes: " + " ".join(f"{k}={v}" for k, v in rep.sizes.items()))
    if rep.homogeneous is not None:
        lines.append(f"homogeneous: {str(rep.homogeneous).lower()}")
    if rep.transitive is not None:
        lines.append(f"transitive: {str(rep.transitive).lower()}")
    if rep.failing_translators:
        lines.append(f"failing translators ({len(rep.failing_translators)}):")
        lines += [f"  {y}" for y in rep.failing_translators]
    for k, v in rep.extra.items():
        if k == "piercing_propagation":
            bad = [p for p in v if not (p["R_j"] and p["R_j_plus_half"])]
            lines.append(f"piercing propagation: {len(v) - len(bad)}/{len(v)} checks hold")
        elif k == "weight_distribution":
            lines.append(f"{k}: " + " ".join(f"{w}:{c}" for w, c in v.items()))
        else:
            lines.append(f"{k}: {json.dumps(v)}")
    lines += rep.method_notes
    return "\n".join(lines) + "\n"


def cmd_check(cfg: RunConfig) -> int:
    rep, holds = run_check(cfg)
    text = rep.to_json() + "\n" if cfg.fmt == "json" else format_report(rep)
    _emit(cfg, text)
    return EXIT_OK if holds else EXIT_FALSE


# --- repro -------------------------------------------------------------------------

def cmd_repro(cfg: RunConfig) -> int:
    from . import repro

    try:
        selected = [repro.criterion(k) for k in cfg.only] if cfg.only else list(repro.CRITERIA)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    results = [repro.run_criterion(c) for c in selected]
    if cfg.fmt == "json":
        text = json.dumps(
            [
                {"id": r.key, "number": r.number, "passed": r.passed, "seconds": round(r.seconds, 3),
                 "limit": r.limit, "detail": r.detail}
                for r in results
            ],
            indent=2,
            default=str,
        ) + "\n"
    else:
        text = "\n".join(r.line() for r in results)
        text += f"\n{sum(r.passed for r in results)}/{len(results)} passed\n"
    _emit(cfg, text)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FALSE


COMMANDS = {"construct": cmd_construct, "check": cmd_check, "repro": cmd_repro}

INPUT_ERRORS = (
    UsageError,
    FormatError,
    STSError,
    NotACodeword,
    LambdaDomainError,
    MalformedTower,
    KeyError,
    FileNotFoundError,
    ValueError,
)
UNSUPPORTED = (UnsupportedCode, GroupTooLarge, ReductionNotApplicable, LinearLambdaError)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    buf = io.StringIO()
    try:
        with redirect_stdout(buf):
            cfg = config_from_args(ns)
            code = COMMANDS[cfg.command](cfg)
    except UNSUPPORTED as exc:
        sys.stdout.write(buf.getvalue())
        print(f"perfcodes: unsupported: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except INPUT_ERRORS as exc:
        sys.stdout.write(buf.getvalue())
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"perfcodes: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
