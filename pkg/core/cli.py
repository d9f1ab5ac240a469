"""
cli.py  –  `braid <subcommand> [flags] [words...]`

Words use the integer style ("1 -2 1"); the letter style ("s1 s2^-1 s1") is accepted too.
Without -n the strand count is inferred from the largest index among the given words.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, Sequence, TextIO

from core.bench import run_bench
from core.burau import burau_det, burau_matrix
from core.config import DEFAULTS, configure_logging
from core.density import between, verify_dense, verify_least
from core.errors import BraidError, PreconditionError, UnsupportedOperationError
from core.garside import (
    CandidateFamily,
    CentralizerParams,
    FRZForm,
    RootKind,
    UVForm,
    centralizer_element,
    delta,
    full_twist,
    homo_h,
    least_element_candidates,
    periodic_root,
    shepperd_generator,
)
from core.ordering import compare, handle_reduce, is_trivial, sigma_sign
from core.subgroups import SubgroupId, decide, find_brunnian, sample
from core.suite import SuiteConfig, run_verification_suite
from core.words import BraidWord, WordStyle, format_word, parse_word

logger = logging.getLogger(__name__)


# ─────────────────────────────────────────────────────────────
# Parser
# ─────────────────────────────────────────────────────────────
def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--n", dest="n", type=int, default=None, help="strand count")
    common.add_argument("--seed", type=int, default=DEFAULTS.seed)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("--len", dest="length", type=int, default=None)
    common.add_argument("--count", type=int, default=None)
    common.add_argument("--style", choices=[s.value for s in WordStyle], default=WordStyle.INTEGER.value)
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def _subgroup_token(token: str) -> SubgroupId:
    try:
        return SubgroupId.from_token(token)
    except UnsupportedOperationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="braid", description="Braid group toolkit: ordering, Garside, Burau, subgroups.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    p = sub.add_parser("compare", parents=[common], help="print LT, EQ or GT")
    p.add_argument("a")
    p.add_argument("b")
    for name, text in (
        ("sign", "print positive:<i>, negative:<i> or trivial"),
        ("reduce", "print a handle-free equivalent word"),
        ("trivial", "print true or false"),
        ("burau", "print the unreduced Burau matrix"),
        ("det", "print det of the Burau matrix"),
    ):
        sub.add_parser(name, parents=[common], help=text).add_argument("word")

    p = sub.add_parser("member", parents=[common], help="decide subgroup membership")
    p.add_argument("subgroup", type=_subgroup_token)
    p.add_argument("word")

    p = sub.add_parser("sample", parents=[common], help="seeded subgroup element (--len factors)")
    p.add_argument("subgroup", type=_subgroup_token)

    p = sub.add_parser("between", parents=[common], help="element of the subgroup strictly between f < g")
    p.add_argument("subgroup", type=_subgroup_token)
    p.add_argument("f")
    p.add_argument("g")

    p = sub.add_parser("verify", parents=[common], help="full suite, or: dense <id> | least <id> <word>")
    p.add_argument("target", nargs="*")

    p = sub.add_parser("construct", parents=[common], help="delta|fulltwist|centralizer|uv|shepperd|least|h4|root")
    p.add_argument("target")
    p.add_argument("params", nargs="*")

    sub.add_parser("bench", parents=[common], help="handle-reduction throughput")
    return parser


# ─────────────────────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────────────────────
class UsageError(Exception):
    """Arguments that parsed but break the subcommand grammar (exit code 2)."""


def _looks_like_flag(token: str) -> bool:
    return token.startswith("-") and not token[1:2].isdigit()


def _needed(text: str) -> int:
    return parse_word(text).n


def _words(args: argparse.Namespace, *texts: str) -> List[BraidWord]:
    n = args.n if args.n is not None else max(_needed(t) for t in texts)
    return [parse_word(t, n) for t in texts]


def _ints(params: Sequence[str], count: int, target: str) -> List[int]:
    if len(params) != count:
        raise UsageError(f"construct {target} takes {count} integers, got {len(params)}")
    try:
        return [int(x) for x in params]
    except ValueError:
        raise UsageError(f"construct {target}: non-integer parameter in {list(params)}") from None


def _enum_token(enum_cls, token: str, what: str):
    try:
        return enum_cls(token)
    except ValueError:
        choices = "|".join(e.value for e in enum_cls)
        raise UsageError(f"unknown {what} {token!r} (expected {choices})") from None


def _subgroup(token: str) -> SubgroupId:
    try:
        return SubgroupId.from_token(token)
    except UnsupportedOperationError as exc:
        raise UsageError(str(exc)) from None


def _require_n(args: argparse.Namespace, what: str) -> int:
    if args.n is None:
        raise PreconditionError(f"{what} needs -n")
    return args.n


def _construct(args: argparse.Namespace) -> List[BraidWord]:
    target, params = args.target, args.params
    if target == "delta":
        (k,) = _ints(params, 1, target)
        return [delta(k, args.n or k)]
    if target == "fulltwist":
        k, p = _ints(params, 2, target)
        return [full_twist(k, args.n or k, p)]
    if target in ("centralizer", "uv"):
        r, a, b = _ints(params, 3, target)
        form = FRZForm(a, b) if target == "centralizer" else UVForm(a, b)
        return [centralizer_element(CentralizerParams(r, form), args.n or r)]
    if target == "shepperd":
        n, i = _ints(params, 2, target)
        return [shepperd_generator(n, i)]
    if target == "least":
        family = CandidateFamily.DELTA
        if len(params) == 4:
            family = _enum_token(CandidateFamily, params[3], "candidate family")
            params = params[:3]
        n, r, u_max = _ints(params, 3, target)
        return least_element_candidates(n, r, u_max, family)
    if target == "h4":
        if len(params) != 1:
            raise UsageError("construct h4 takes one word")
        return [homo_h(parse_word(params[0], 4))]
    if target == "root":
        if len(params) != 2:
            raise UsageError("construct root takes <m> delta|epsilon")
        m = _ints(params[:1], 1, target)[0]
        kind = _enum_token(RootKind, params[1], "root kind")
        return [periodic_root(m, kind, args.n or m)]
    raise UsageError(f"unknown construct target {target!r}")


def _verify(args: argparse.Namespace, out: TextIO) -> int:
    trials = args.trials if args.trials is not None else DEFAULTS.suite_trials
    budget = args.budget if args.budget is not None else DEFAULTS.density_budget
    if not args.target:
        report = run_verification_suite(SuiteConfig(trials=trials, seed=args.seed, show_progress=args.verbose > 0))
        out.write("\n".join(report.to_lines()) + "\n")
        return 0 if report.passed else 1

    kind, rest = args.target[0], args.target[1:]
    if kind == "dense" and len(rest) == 1:
        sid = _subgroup(rest[0])
        n = _require_n(args, "verify dense")
        gens = None
        if sid is SubgroupId.BRUNNIAN:
            gens = find_brunnian(n, 6)
            if not gens:
                raise PreconditionError(f"no Brunnian generators found in B_{n}")
        summary = verify_dense(sid, n, trials, args.seed, generators=gens, budget=budget)
        out.write("\n".join(summary.to_lines()) + "\n")
        return 0
    if kind == "least" and len(rest) == 2:
        sid = _subgroup(rest[0])
        candidate = _words(args, rest[1])[0]
        summary = verify_least(sid, candidate, candidate.n, trials, args.seed)
        out.write("\n".join(summary.to_lines()) + "\n")
        return 0 if summary.passed else 1
    raise UsageError("verify takes no target, `dense <id>` or `least <id> <word>`")


def _run(args: argparse.Namespace, out: TextIO) -> int:
    style = WordStyle(args.style)
    budget = args.budget if args.budget is not None else DEFAULTS.step_budget
    cmd = args.command

    def emit(line: str) -> None:
        out.write(line + "\n")

    if cmd == "compare":
        a, b = _words(args, args.a, args.b)
        emit(compare(a, b, budget).value)
    elif cmd == "sign":
        emit(str(sigma_sign(_words(args, args.word)[0], budget)))
    elif cmd == "reduce":
        emit(format_word(handle_reduce(_words(args, args.word)[0], budget), style))
    elif cmd == "trivial":
        emit("true" if is_trivial(_words(args, args.word)[0], budget) else "false")
    elif cmd == "burau":
        emit(burau_matrix(_words(args, args.word)[0]).to_text())
    elif cmd == "det":
        emit(str(burau_det(_words(args, args.word)[0])))
    elif cmd == "member":
        emit("true" if decide(args.subgroup, _words(args, args.word)[0], budget) else "false")
    elif cmd == "sample":
        size = args.length if args.length is not None else DEFAULTS.sample_size
        emit(format_word(sample(args.subgroup, _require_n(args, "sample"), size, args.seed), style))
    elif cmd == "between":
        f, g = _words(args, args.f, args.g)
        density_budget = args.budget if args.budget is not None else DEFAULTS.density_budget
        for line in between(args.subgroup, f, g, density_budget).to_lines():
            emit(line)
    elif cmd == "verify":
        return _verify(args, out)
    elif cmd == "construct":
        for w in _construct(args):
            emit(format_word(w, style))
    elif cmd == "bench":
        report = run_bench(
            args.n if args.n is not None else 6,
            args.length if args.length is not None else 200,
            args.count if args.count is not None else 100,
            args.seed,
            budget,
        )
        for line in report.to_lines():
            emit(line)
    return 0


def dispatch(argv: Sequence[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Run one invocation; results go to `out`, errors to `err`. Returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args, extras = parser.parse_known_args(list(argv))
        # argparse hands `verify` targets that follow a flag back as extras
        if extras:
            if args.command != "verify" or any(_looks_like_flag(x) for x in extras):
                parser.error(f"unrecognized arguments: {' '.join(extras)}")
            args.target = list(args.target) + extras
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    configure_logging({0: DEFAULTS.log_level, 1: "INFO"}.get(args.verbose, "DEBUG"))
    try:
        return _run(args, out)
    except UsageError as exc:
        err.write(f"{parser.prog} {args.command}: usage error: {exc}\n")
        return 2
    except (BraidError, ValueError) as exc:
        logger.debug(f"[cli] {type(exc).__name__}: {exc}")
        err.write(f"error: {exc}\n")
        return 1


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(dispatch(sys.argv[1:] if argv is None else argv))
