"""Command-line interface.

Exit codes: 0 success, 1 parse error, 2 inapplicable operation,
3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

EXIT_OK, EXIT_PARSE, EXIT_INAPPLICABLE, EXIT_VERIFY = 0, 1, 2, 3


class Inapplicable(Exception):
    pass


class ParseError(ValueError):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, default=str))


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def _fractions(text: str) -> list[Fraction]:
    return [_fraction(p) for p in text.split(",") if p.strip()]


def parse_matrix(text: str):
    """'a,b;c,d' or '[[a,b],[c,d]]' with rational entries."""
    from .matrices import Mat2

    nums = re.findall(r"-?\d+(?:\.\d+)?(?:/\d+)?", text)
    if len(nums) != 4:
        raise ParseError(f"expected four matrix entries, got {text!r}")
    return Mat2(*(_fraction(n) for n in nums))


def _word(args):
    from .words import parse_word

    return parse_word(args.word, getattr(args, "generators", None))


def cmd_analyze(args) -> int:
    from .classifier import AnalysisOptions, analyze, render_report

    w = _word(args)
    opts = AnalysisOptions(
        big_samples=tuple(_fractions(args.big)) if args.big else (),
        do_ff=args.prime is not None,
        prime=args.prime or 5,
        projective=args.projective,
    )
    print(render_report(analyze(w, opts), "json" if args.json else "text"))
    return EXIT_OK


def cmd_trace(args) -> int:
    from .fricke import trace_polys

    w = _word(args)
    if w.n != 2:
        raise Inapplicable("trace polynomials are defined for two-letter words")
    P, Q = trace_polys(w)
    order = ("s", "t", "u")
    _emit({"word": str(w), "P": P.to_text(order), "Q": Q.to_text(order)})
    return EXIT_OK


def cmd_big(args) -> int:
    from .algebra.elimination import DegenerateElimination
    from .big import big_slice, iterate_and_check
    from .fricke import SizeGuardExceeded

    w = _word(args)
    if w.n != 2 or w.is_identity():
        raise Inapplicable("the slice criterion needs a non-identity two-letter word")
    try:
        if args.iterate > 1:
            _emit(iterate_and_check(w, args.iterate, args.t).to_json())
        else:
            _emit(big_slice(w, args.t).to_json())
    except (DegenerateElimination, SizeGuardExceeded) as exc:
        raise Inapplicable(str(exc)) from exc
    return EXIT_OK


def cmd_witness(args) -> int:
    from .fricke import PreimageError, preimage_for_matrix, preimage_for_trace
    from .magnus import DerivedLevel, classify_derived_level, is_unipotent, unipotent_witness
    from .matrices import evaluate

    w = _word(args)
    target = args.target.strip()
    if any(ch in target for ch in ",;["):
        X = parse_matrix(target)
        if X.det() != 1:
            raise Inapplicable("target must have determinant 1")
        if is_unipotent(X):
            if classify_derived_level(w) is not DerivedLevel.InF1NotF2:
                raise Inapplicable("exact unipotent witnesses need a word in F^(1) outside F^(2)")
            wit = unipotent_witness(w, X, _fractions(args.point) if args.point else None)
            ok = evaluate(w, list(wit.Z)) == X
            _emit({"kind": "unipotent", "verified": ok, **wit.to_json()})
            return EXIT_OK if ok else EXIT_VERIFY
        if w.n != 2:
            raise Inapplicable("semisimple preimages are computed for two-letter words")
        try:
            pre = preimage_for_matrix(w, X, seed=args.seed)
        except (PreimageError, ValueError) as exc:
            raise Inapplicable(str(exc)) from exc
        _emit(_preimage_json(pre))
        return EXIT_OK if pre.residual < 1e-8 else EXIT_VERIFY
    if w.n != 2:
        raise Inapplicable("trace preimages are computed for two-letter words")
    if "i" in target or "j" in target:
        try:
            value = complex(target.replace("i", "j"))
        except ValueError as exc:
            raise ParseError(f"not a complex number: {target!r}") from exc
    else:
        value = _fraction(target)
    try:
        pre = preimage_for_trace(w, value, seed=args.seed)
    except (PreimageError, ValueError) as exc:
        raise Inapplicable(str(exc)) from exc
    _emit(_preimage_json(pre))
    return EXIT_OK


def _preimage_json(pre) -> dict:
    from .triangular import _cjson

    return {
        "kind": "numeric",
        "x": _cjson(pre.x),
        "y": _cjson(pre.y),
        "point": [str(v) for v in pre.point],
        "residual": pre.residual,
        "attempts": pre.attempts,
    }


def cmd_minusid(args) -> int:
    from .magnus import DerivedLevel, classify_derived_level
    from .triangular import minus_id_criterion

    w = _word(args)
    if w.n != 2 or classify_derived_level(w) is not DerivedLevel.InF1NotF2:
        raise Inapplicable("the -id criterion needs a two-letter word in F^(1) outside F^(2)")
    _emit(minus_id_criterion(w).to_json())
    return EXIT_OK


def cmd_ff_image(args) -> int:
    from .finite_field import BudgetExceeded, ff_image

    w = _word(args)
    try:
        img = ff_image(w, args.prime, args.projective)
    except (BudgetExceeded, ValueError) as exc:
        raise Inapplicable(str(exc)) from exc
    _emit(img.to_json())
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    from .paper_checks import verify_paper_suite

    rep = verify_paper_suite(seed=args.seed)
    if args.json:
        _emit(rep.to_json())
    else:
        print(rep.to_text())
    return EXIT_OK if rep.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wordmaps", description="Word maps on SL(2, C) and PSL(2, C).")
    p.add_argument("--seed", type=int, default=0, help="seed for stochastic steps")
    sub = p.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("word")
        sp.add_argument("--generators", type=int, default=None, help="number of generators")
        sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    a = word_cmd("analyze", cmd_analyze, "run every criterion and print a report")
    a.add_argument("--big", default=None, help="comma-separated slice values t = a")
    a.add_argument("--json", action="store_true")
    a.add_argument("--prime", type=int, default=None, help="also run the finite-field explorer")
    a.add_argument("--projective", action="store_true")

    word_cmd("trace", cmd_trace, "trace polynomials P, Q")
    b = word_cmd("big", cmd_big, "slice criterion at t = a")
    b.add_argument("--t", type=_fraction, required=True)
    b.add_argument("--iterate", type=int, default=1, help="check the n-th iterate v_n instead")

    wt = word_cmd("witness", cmd_witness, "explicit preimage of a matrix or a trace value")
    wt.add_argument("--target", required=True, help="'a,b;c,d' or a trace value")
    wt.add_argument("--point", default=None, help="comma-separated nonzero rationals for the unipotent witness")

    word_cmd("minusid", cmd_minusid, "-id criterion for commutator-subgroup words")
    ff = word_cmd("ff-image", cmd_ff_image, "exhaustive image over SL(2, p) or PSL(2, p)")
    ff.add_argument("--prime", type=int, required=True)
    ff.add_argument("--projective", action="store_true")

    vp = sub.add_parser("verify-paper", help="replay the published transcripts exactly")
    vp.add_argument("--json", action="store_true")
    vp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    vp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    from .words import GeneratorRangeError, WordSyntaxError

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (WordSyntaxError, GeneratorRangeError, ParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Inapplicable, ValueError) as exc:
        print(f"inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE


if __name__ == "__main__":
    sys.exit(main())
