"""Command-line driver.

Exit codes: 0 success, 1 mathematical negative (not a basis, not a
member), 2 usage or parse error, 3 step budget exceeded.  Reports are
deterministic: fixed ordering, no timestamps.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import oracle, rewrite
from .errors import BudgetExceeded, GsbError, PresentationError
from .fields import GF, QQ
from .lift import lift_commutative, lift_mixed
from .orders import make_order
from .poly import Context, Polynomial
from .presentation import (
    Presentation,
    emit_presentation,
    parse_polynomial,
    parse_presentation,
    presentation_from_context,
)
from .render import format_monomial, format_polynomial
from .rewrite import CompletionConfig

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _add_bounds(parser):
    parser.add_argument("--max-degree", type=int, default=8, metavar="D",
                        help="ambiguity degree bound (default 8)")
    parser.add_argument("--param-bound", type=int, default=2, metavar="P",
                        help="parameter word length bound (default 2)")
    parser.add_argument("--max-steps", type=int, default=200_000, metavar="N",
                        help="instantiation check budget")
    parser.add_argument("--field", default=None, metavar="SPEC",
                        help="override the presentation field: q or p=<prime>")
    parser.add_argument("--order", default=None, metavar="SPEC",
                        help="override the presentation order")
    parser.add_argument("--log", choices=("pairs", "quiet"), default="quiet",
                        help="emit the per-pair composition log")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsb",
        description="Groebner-Shirshov basis engine for free, commutative, "
        "tensor, and mixed polynomial algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", help="close a presentation under compositions")
    p.add_argument("file")
    _add_bounds(p)

    p = sub.add_parser("check", help="verify closure without extending")
    p.add_argument("file")
    _add_bounds(p)

    p = sub.add_parser("reduce", help="normal form of a polynomial")
    p.add_argument("file")
    p.add_argument("poly")
    _add_bounds(p)

    p = sub.add_parser("irr", help="irreducible monomials of one degree")
    p.add_argument("file")
    p.add_argument("degree", type=int)
    p.add_argument("--count-only", action="store_true")
    _add_bounds(p)

    p = sub.add_parser("wordproblem", help="ideal membership after completion")
    p.add_argument("file")
    p.add_argument("poly")
    _add_bounds(p)

    p = sub.add_parser("lift", help="lifting constructions")
    lift_sub = p.add_subparsers(dest="flavor", required=True)
    for flavor in ("eps", "tensor"):
        q = lift_sub.add_parser(flavor)
        q.add_argument("file")
        q.add_argument("--cap", type=int, default=8,
                       help="degree cap for interior multipliers (default 8)")
        _add_bounds(q)

    p = sub.add_parser("oracle", help="independent linear-algebra checks")
    oracle_sub = p.add_subparsers(dest="query", required=True)
    q = oracle_sub.add_parser("member")
    q.add_argument("file")
    q.add_argument("poly")
    q.add_argument("--degree", type=int, default=8, metavar="D")
    _add_bounds(q)
    q = oracle_sub.add_parser("dims")
    q.add_argument("file")
    q.add_argument("--degree", type=int, default=8, metavar="D")
    _add_bounds(q)

    return parser


def _load(args) -> Presentation:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise PresentationError(str(exc)) from None
    if getattr(args, "field", None):
        _, field_text = _field_flag(args.field)
        text = _swap_field(text, field_text)
    pres = parse_presentation(text)
    if getattr(args, "order", None):
        order = make_order(args.order, pres.universe)
        ctx = Context(pres.field, pres.universe, order)
        rels = [Polynomial.from_terms(ctx, r.terms) for r in pres.relations]
        pres = presentation_from_context(ctx, rels, field_text=pres.field_text)
    return pres


def _field_flag(spec: str):
    spec = spec.strip()
    if spec.lower() in ("q", "qq"):
        return QQ, "Q"
    m = re.fullmatch(r"p=(\d+)", spec) or re.fullmatch(r"F(\d+)", spec)
    if m:
        p = int(m.group(1))
        return GF(p), f"F{p}"
    raise PresentationError(f"bad --field value {spec!r}")


def _swap_field(text: str, field_text: str) -> str:
    lines = []
    replaced = False
    for line in text.splitlines():
        if line.split("#", 1)[0].strip().startswith("field "):
            lines.append(f"field {field_text}")
            replaced = True
        else:
            lines.append(line)
    if not replaced:
        lines.insert(0, f"field {field_text}")
    return "\n".join(lines)


def _config(args) -> CompletionConfig:
    return CompletionConfig(
        max_degree=args.max_degree,
        param_bound=args.param_bound,
        max_steps=args.max_steps,
    )


def _print_state(state, out, show_log):
    print(state.summary(), file=out)
    if show_log:
        for line in state.log:
            print(line, file=out)
    print("basis:", file=out)
    for i, s in enumerate(state.elements):
        print(f"  s{i + 1} = {format_polynomial(s)}", file=out)


def _cmd_complete(args, out):
    pres = _load(args)
    state = rewrite.complete(pres.relations, _config(args))
    _print_state(state, out, args.log == "pairs")
    return EXIT_OK


def _cmd_check(args, out):
    pres = _load(args)
    state = rewrite.check(pres.relations, _config(args))
    _print_state(state, out, args.log == "pairs")
    if state.failures:
        print(
            f"NOT a Groebner-Shirshov basis: {len(state.failures)} "
            "non-trivial composition(s)",
            file=out,
        )
        for i, j, fam, param, trace in state.failures:
            print(
                f"  pair#({i + 1},{j + 1}) {fam.describe()} -> remainder "
                + format_polynomial(trace.remainder),
                file=out,
            )
        return EXIT_NEGATIVE
    bound = "all degrees" if state.status == rewrite.SATURATED else (
        f"degree {state.config.max_degree} (param bound {state.config.param_bound})"
    )
    print(f"GSB verified up to {bound}", file=out)
    return EXIT_OK


def _cmd_reduce(args, out):
    pres = _load(args)
    f = parse_polynomial(args.poly, pres.ctx)
    basis = [r.make_monic() for r in pres.relations]
    trace = rewrite.reduce(f, basis)
    print(f"steps: {len(trace.steps)}", file=out)
    print(f"remainder: {format_polynomial(trace.remainder)}", file=out)
    return EXIT_OK


def _cmd_irr(args, out):
    pres = _load(args)
    basis = [r.make_monic() for r in pres.relations]
    if basis:
        level = rewrite.irr(basis, args.degree)
    else:
        level = rewrite.irr_levels_for(pres.ctx, [], args.degree)[args.degree]
    if not args.count_only:
        for m in level:
            print(format_monomial(m, pres.universe), file=out)
    print(f"count: {len(level)}", file=out)
    return EXIT_OK


def _cmd_wordproblem(args, out):
    pres = _load(args)
    f = parse_polynomial(args.poly, pres.ctx)
    state = rewrite.complete(pres.relations, _config(args))
    ok = rewrite.word_problem(f, state)
    print(f"member: {'yes' if ok else 'no'}", file=out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_lift(args, out):
    pres = _load(args)
    cfg = _config(args)
    if args.flavor == "eps":
        if pres.universe.kind != "commutative":
            raise PresentationError("lift eps expects a commutative presentation")
        result = lift_commutative(pres.relations, args.cap, cfg)
    else:
        if pres.universe.kind != "mixed":
            raise PresentationError("lift tensor expects a mixed presentation")
        result = lift_mixed(pres.relations, args.cap, cfg)
    lifted = presentation_from_context(
        result.ctx, result.elements, field_text=pres.field_text
    )
    print(emit_presentation(lifted, warnings=result.warnings()), end="", file=out)
    return EXIT_OK


def _cmd_oracle(args, out):
    pres = _load(args)
    basis = [r.make_monic() for r in pres.relations]
    if args.query == "member":
        f = parse_polynomial(args.poly, pres.ctx)
        ok = oracle.member(f, basis, args.degree)
        print(f"member: {'yes' if ok else 'no'}", file=out)
        return EXIT_OK if ok else EXIT_NEGATIVE
    dims = oracle.quotient_dim(basis if basis else pres.relations, args.degree)
    for d, n in enumerate(dims):
        print(f"d={d} dim={n}", file=out)
    return EXIT_OK


_COMMANDS = {
    "complete": _cmd_complete,
    "check": _cmd_check,
    "reduce": _cmd_reduce,
    "irr": _cmd_irr,
    "wordproblem": _cmd_wordproblem,
    "lift": _cmd_lift,
    "oracle": _cmd_oracle,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=out)
        if exc.state is not None:
            print(exc.state.summary(), file=out)
        return EXIT_BUDGET
    except PresentationError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_USAGE
    except GsbError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_NEGATIVE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
