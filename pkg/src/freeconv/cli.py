"""Command-line front end.

Every kernel operation is exposed as a subcommand working on the JSON file
formats, with a handful of inline literals (zeta, moeb, unit, dirac:a,
semicircle:a:r2, poisson:lam:alpha) so that the standard identities can be
reproduced without fixture files.

Exit codes: 0 on success, 1 on domain errors (a machine-readable
``error:<category>: message`` line goes to standard error), 2 on usage
errors.  Flags must agree with whatever the input files declare; a
disagreement is an error rather than an override.
"""

from __future__ import annotations

import argparse
import sys

from . import boxconv, witt
from .distributions import (
    CumulantTable,
    JointDistribution,
    cumulants_of,
    free_product,
    hadamard_law_mul,
    is_combinatorially_free,
    law_dirac,
    law_free_poisson,
    law_semicircle,
    m_transform,
    moments_of,
)
from .errors import FlagConflictError, FreeconvError, ParseError
from .hopf import (
    GenPolynomial,
    RepMatrix,
    antipode,
    coproduct,
    counit,
    hopf_axiom_check,
    s_transform,
    verify_s_multiplicativity,
)
from .partitions import NCPartition, enumerate_nc, kreweras
from .rings import QQ, RingDescriptor
from .series import TruncSeries
from .verify import DEFAULT_SEED, SUITES, run_suite
from .witt import LambdaElement, OneDimLaw

__all__ = ["main"]


class _Usage(Exception):
    pass


_LAW_HEADS = ("dirac", "semicircle", "poisson")
_SERIES_LITERALS = ("zeta", "moeb", "unit")
_LAMBDA_LITERALS = ("unit", "one-minus-z")


def _parse_ring(args) -> RingDescriptor | None:
    if getattr(args, "ring", None) is None:
        return None
    return RingDescriptor.parse(args.ring)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read input {path!r}: {exc}") from exc


def _emit(text: str, args) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _merge(kind: str, flag_value, file_value):
    """Combine an explicit flag with a value a file declares."""
    if file_value is None:
        return flag_value
    if flag_value is not None and flag_value != file_value:
        raise FlagConflictError(
            f"{kind} flag {flag_value!r} contradicts input file "
            f"value {file_value!r}"
        )
    return file_value


def _is_law_literal(text: str) -> bool:
    return text.split(":", 1)[0] in _LAW_HEADS


def _law_from_literal(text: str, order, ring, name: str) -> JointDistribution:
    head, _, rest = text.partition(":")
    parts = rest.split(":") if rest else []
    ring = ring or QQ
    if order is None:
        raise _Usage(f"literal {text!r} needs --order")
    try:
        if head == "dirac" and len(parts) == 1:
            return law_dirac(ring(parts[0]), order, ring, name=name)
        if head == "semicircle" and len(parts) == 2:
            return law_semicircle(ring(parts[0]), ring(parts[1]), order,
                                  ring, name=name)
        if head == "poisson" and len(parts) == 2:
            return law_free_poisson(ring(parts[0]), ring(parts[1]), order,
                                    ring, name=name)
    except FreeconvError:
        raise
    raise ParseError(f"bad law literal {text!r}")


def _load_laws(texts, args, names=None) -> list[JointDistribution]:
    """Resolve law inputs: files first (they pin order and ring), then
    literals against the merged context."""
    order = getattr(args, "order", None)
    ring = _parse_ring(args)
    loaded: list = [None] * len(texts)
    for i, text in enumerate(texts):
        if _is_law_literal(text):
            continue
        d = JointDistribution.loads(_read(text))
        order = _merge("order", order, d.order)
        ring = _merge("ring", ring, d.ring)
        loaded[i] = d
    for i, text in enumerate(texts):
        if loaded[i] is None:
            name = names[i] if names else "x"
            loaded[i] = _law_from_literal(text, order, ring, name)
    return loaded


def _series_from_literal(text: str, s, order, ring) -> TruncSeries:
    ring = ring or QQ
    if text in _SERIES_LITERALS:
        if s is None or order is None:
            raise _Usage(f"literal {text!r} needs --s and --order")
        factory = {
            "zeta": boxconv.zeta_series,
            "moeb": boxconv.moeb_series,
            "unit": boxconv.unit_series,
        }[text]
        return factory(s, order, ring)
    if _is_law_literal(text):
        if s not in (None, 1):
            raise FlagConflictError(f"law literal {text!r} is one-dimensional")
        return m_transform(_law_from_literal(text, order, ring, "x"))
    raise ParseError(f"unknown series input {text!r}")


def _load_series(texts, args) -> list[TruncSeries]:
    s = getattr(args, "s", None)
    order = getattr(args, "order", None)
    ring = _parse_ring(args)
    loaded: list = [None] * len(texts)
    for i, text in enumerate(texts):
        if text in _SERIES_LITERALS or _is_law_literal(text):
            continue
        f = TruncSeries.loads(_read(text))
        s = _merge("s", s, f.s)
        order = _merge("order", order, f.order)
        ring = _merge("ring", ring, f.ring)
        loaded[i] = f
    for i, text in enumerate(texts):
        if loaded[i] is None:
            loaded[i] = _series_from_literal(text, s, order, ring)
    return loaded


def _load_one_dim(text: str, args, name: str = "x") -> OneDimLaw:
    d = _load_laws([text], args, names=[name])[0]
    return OneDimLaw.from_distribution(d)


def _load_lambda(text: str, args) -> LambdaElement:
    order = getattr(args, "order", None)
    ring = _parse_ring(args)
    if text in _LAMBDA_LITERALS:
        if order is None:
            raise _Usage(f"literal {text!r} needs --order")
        ring = ring or QQ
        if text == "unit":
            return LambdaElement.unit(order, ring)
        return LambdaElement.one_minus_z(order, ring)
    f = LambdaElement.loads(_read(text))
    _merge("order", order, f.order)
    _merge("ring", ring, f.ring)
    return f


def _parse_word(text: str) -> tuple:
    try:
        word = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad word {text!r}: comma-separated letters") from exc
    if not word or any(x < 1 for x in word):
        raise ParseError(f"bad word {text!r}: letters start at 1")
    return word


def _partition_text(p: NCPartition) -> str:
    return "".join("{" + ",".join(map(str, b)) + "}" for b in p.blocks)


# -- subcommand handlers -------------------------------------------------


def _cmd_nc_enum(args) -> int:
    parts = enumerate_nc(args.n)
    if args.count:
        _emit(str(len(parts)), args)
    else:
        _emit("\n".join(_partition_text(p) for p in parts), args)
    return 0


def _cmd_kreweras(args) -> int:
    p = NCPartition.parse(args.partition, n=args.n)
    _emit(_partition_text(kreweras(p)), args)
    return 0


def _cmd_box_conv(args) -> int:
    f, g = _load_series([args.left, args.right], args)
    _emit(boxconv.box_conv(f, g).dumps(), args)
    return 0


def _cmd_box_inv(args) -> int:
    (f,) = _load_series([args.series], args)
    _emit(boxconv.box_inverse(f).dumps(), args)
    return 0


def _make_named_series(factory):
    def handler(args):
        ring = _parse_ring(args) or QQ
        _emit(factory(args.s, args.order, ring).dumps(), args)
        return 0

    return handler


def _cmd_free_add(args) -> int:
    f, g = _load_series([args.left, args.right], args)
    _emit(boxconv.free_add(f, g).dumps(), args)
    return 0


def _cmd_free_mul(args) -> int:
    f, g = _load_series([args.left, args.right], args)
    _emit(boxconv.free_mul(f, g).dumps(), args)
    return 0


def _cmd_m2c(args) -> int:
    (f,) = _load_series([args.series], args)
    _emit(boxconv.cumulants_from_moments(f).dumps(), args)
    return 0


def _cmd_c2m(args) -> int:
    (f,) = _load_series([args.series], args)
    _emit(boxconv.moments_from_cumulants(f).dumps(), args)
    return 0


def _cmd_law(args) -> int:
    ring = _parse_ring(args)
    d = _law_from_literal(args.literal, args.order, ring, args.name)
    _emit(d.dumps(), args)
    return 0


def _cmd_free_product(args) -> int:
    d1, d2 = _load_laws([args.left, args.right], args, names=["x1", "x2"])
    _emit(free_product(d1, d2).dumps(), args)
    return 0


def _cmd_cumulants(args) -> int:
    (d,) = _load_laws([args.dist], args)
    _emit(cumulants_of(d).dumps(), args)
    return 0


def _cmd_moments(args) -> int:
    k = CumulantTable.loads(_read(args.table))
    _emit(moments_of(k).dumps(), args)
    return 0


def _cmd_check_free(args) -> int:
    (d,) = _load_laws([args.dist], args)
    groups = [part.split(",") for part in args.groups.split(";") if part]
    ok = is_combinatorially_free(d, groups)
    _emit("free: yes" if ok else "free: no", args)
    return 0


def _cmd_hadamard_mul(args) -> int:
    d1, d2 = _load_laws([args.left, args.right], args, names=["x", "x"])
    _emit(hadamard_law_mul(d1, d2).dumps(), args)
    return 0


def _cmd_s_transform_1d(args) -> int:
    law = _load_one_dim(args.law, args)
    _emit(witt.s_transform(law).dumps(), args)
    return 0


def _cmd_ghost(args) -> int:
    f = _load_lambda(args.element, args)
    _emit(witt.ghost(f).dumps(), args)
    return 0


def _cmd_witt_mul(args) -> int:
    f = _load_lambda(args.left, args)
    g = _load_lambda(args.right, args)
    _emit(witt.witt_mul(f, g).dumps(), args)
    return 0


def _cmd_log(args) -> int:
    law = _load_one_dim(args.law, args)
    _emit(witt.log_iso(law).to_distribution(args.name).dumps(), args)
    return 0


def _cmd_exp(args) -> int:
    law = _load_one_dim(args.law, args)
    _emit(witt.exp_iso(law).to_distribution(args.name).dumps(), args)
    return 0


def _cmd_circled_ast(args) -> int:
    l1 = _load_one_dim(args.left, args)
    l2 = _load_one_dim(args.right, args)
    _emit(witt.circled_ast(l1, l2).to_distribution(args.name).dumps(), args)
    return 0


def _cmd_coproduct(args) -> int:
    _emit(str(coproduct(_parse_word(args.word))), args)
    return 0


def _cmd_antipode(args) -> int:
    _emit(str(antipode(_parse_word(args.word))), args)
    return 0


def _cmd_counit(args) -> int:
    _emit(str(counit(GenPolynomial.gen(_parse_word(args.word)))), args)
    return 0


def _cmd_hopf_check(args) -> int:
    report = hopf_axiom_check(args.order, args.s)
    lines = [f"checks run: {report.checks}"]
    lines.extend(report.failures)
    lines.append("all axioms hold" if report.ok else "AXIOM FAILURES")
    _emit("\n".join(lines), args)
    if not report.ok:
        print("error:check-failed: hopf axioms violated", file=sys.stderr)
        return 1
    return 0


def _cmd_s_transform(args) -> int:
    (f,) = _load_series([args.series], args)
    _emit(s_transform(f, args.n).dumps(), args)
    return 0


def _cmd_verify_s(args) -> int:
    (d,) = _load_laws([args.dist], args)
    a_names = args.a.split(",")
    b_names = args.b.split(",")
    report = verify_s_multiplicativity(d, a_names, b_names, args.n)
    _emit(str(report), args)
    if not report.ok:
        print("error:check-failed: matrix identity violated", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, order=args.order)
    _emit("\n".join(r.line() for r in results), args)
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"error:check-failed: {len(failed)} criteria failed",
              file=sys.stderr)
        return 1
    return 0


# -- parser wiring -------------------------------------------------------


def _add_common(sp, *, ring=True, order=False, s=False, out=True):
    if ring:
        sp.add_argument("--ring", help="rational (default) or mod:p")
    if order:
        sp.add_argument("--order", type=int, help="truncation order")
    if s:
        sp.add_argument("--s", type=int, help="number of variables")
    if out:
        sp.add_argument("--out", help="write output to this path")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freeconv",
        description="Exact free-probability kernel: non-crossing "
        "partitions, boxed convolution, free cumulants, the lambda layer, "
        "and the triangular matrix model.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("nc-enum", help="list the non-crossing partitions")
    sp.add_argument("n", type=int)
    sp.add_argument("--count", action="store_true",
                    help="print only how many")
    _add_common(sp, ring=False)
    sp.set_defaults(func=_cmd_nc_enum)

    sp = sub.add_parser("kreweras", help="complement of a partition")
    sp.add_argument("partition", help='e.g. "{1,3}{2}"')
    sp.add_argument("--n", type=int, help="ground-set size if larger than "
                    "the largest listed point")
    _add_common(sp, ring=False)
    sp.set_defaults(func=_cmd_kreweras)

    sp = sub.add_parser("box-conv", help="convolution of two series")
    sp.add_argument("left")
    sp.add_argument("right")
    _add_common(sp, order=True, s=True)
    sp.set_defaults(func=_cmd_box_conv)

    sp = sub.add_parser("box-inv", help="convolution inverse")
    sp.add_argument("series")
    _add_common(sp, order=True, s=True)
    sp.set_defaults(func=_cmd_box_inv)

    for name, factory in (("zeta", boxconv.zeta_series),
                          ("moeb", boxconv.moeb_series)):
        sp = sub.add_parser(name, help=f"emit the {name} series")
        sp.add_argument("--s", type=int, required=True)
        sp.add_argument("--order", type=int, required=True)
        _add_common(sp)
        sp.set_defaults(func=_make_named_series(factory))

    sp = sub.add_parser("free-add", help="additive convolution of moment "
                        "series or law literals")
    sp.add_argument("left")
    sp.add_argument("right")
    _add_common(sp, order=True, s=True)
    sp.set_defaults(func=_cmd_free_add)

    sp = sub.add_parser("free-mul", help="multiplicative convolution of "
                        "moment series or law literals")
    sp.add_argument("left")
    sp.add_argument("right")
    _add_common(sp, order=True, s=True)
    sp.set_defaults(func=_cmd_free_mul)

    sp = sub.add_parser("m2c", help="moments to cumulants")
    sp.add_argument("series")
    _add_common(sp, order=True, s=True)
    sp.set_defaults(func=_cmd_m2c)

    sp = sub.add_parser("c2m", help="cumulants to moments")
    sp.add_argument("series")
    _add_common(sp, order=True, s=True)
    sp.set_defaults(func=_cmd_c2m)

    sp = sub.add_parser("law", help="emit a named law as a moment table")
    sp.add_argument("literal", help="dirac:a | semicircle:a:r2 | poisson:lam:alpha")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--name", default="x")
    _add_common(sp)
    sp.set_defaults(func=_cmd_law)

    sp = sub.add_parser("free-product", help="join two moment tables freely")
    sp.add_argument("left")
    sp.add_argument("right")
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_free_product)

    sp = sub.add_parser("cumulants", help="cumulant table of a moment table")
    sp.add_argument("dist")
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_cumulants)

    sp = sub.add_parser("moments", help="moment table of a cumulant table")
    sp.add_argument("table")
    _add_common(sp)
    sp.set_defaults(func=_cmd_moments)

    sp = sub.add_parser("check-free", help="are the generator groups free?")
    sp.add_argument("dist")
    sp.add_argument("--groups", required=True,
                    help='semicolon-separated, e.g. "a1,a2;b"')
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_check_free)

    sp = sub.add_parser("hadamard-mul", help="cumulant-wise product of "
                        "two one-variable laws")
    sp.add_argument("left")
    sp.add_argument("right")
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_hadamard_mul)

    sp = sub.add_parser("s-transform-1d", help="multiplicative transform "
                        "of a one-variable law")
    sp.add_argument("law")
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_s_transform_1d)

    sp = sub.add_parser("ghost", help="logarithmic-derivative components")
    sp.add_argument("element", help="lambda-element file, or unit / one-minus-z")
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_ghost)

    sp = sub.add_parser("witt-mul", help="second product of lambda elements")
    sp.add_argument("left")
    sp.add_argument("right")
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_witt_mul)

    sp = sub.add_parser("log", help="additive picture of a mean-1 law")
    sp.add_argument("law")
    sp.add_argument("--name", default="x")
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_log)

    sp = sub.add_parser("exp", help="inverse of log")
    sp.add_argument("law")
    sp.add_argument("--name", default="x")
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_exp)

    sp = sub.add_parser("circled-ast", help="second ring product of two "
                        "mean-1 laws")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--name", default="x")
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_circled_ast)

    sp = sub.add_parser("coproduct", help="coproduct of a generator")
    sp.add_argument("word", help='comma-separated letters, e.g. "1,2,1"')
    _add_common(sp, ring=False)
    sp.set_defaults(func=_cmd_coproduct)

    sp = sub.add_parser("antipode", help="antipode of a generator")
    sp.add_argument("word")
    _add_common(sp, ring=False)
    sp.set_defaults(func=_cmd_antipode)

    sp = sub.add_parser("counit", help="counit of a generator")
    sp.add_argument("word")
    _add_common(sp, ring=False)
    sp.set_defaults(func=_cmd_counit)

    sp = sub.add_parser("hopf-check", help="verify the Hopf axioms "
                        "symbolically")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    _add_common(sp, ring=False)
    sp.set_defaults(func=_cmd_hopf_check)

    sp = sub.add_parser("s-transform", help="triangular matrix of a series")
    sp.add_argument("series")
    sp.add_argument("--n", type=int, help="weight bound (default: series order)")
    _add_common(sp, order=True, s=True)
    sp.set_defaults(func=_cmd_s_transform)

    sp = sub.add_parser("verify-s", help="matrix identity for a free pair "
                        "inside a moment table")
    sp.add_argument("dist")
    sp.add_argument("--a", required=True, help="comma-separated names")
    sp.add_argument("--b", required=True, help="comma-separated names")
    sp.add_argument("--n", type=int, required=True)
    _add_common(sp, order=True)
    sp.set_defaults(func=_cmd_verify_s)

    sp = sub.add_parser("verify", help="run the acceptance property suite")
    sp.add_argument("--suite", default="all", choices=sorted(SUITES))
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--order", type=int, default=None,
                    help="override the order of the randomized group and "
                    "transform checks")
    _add_common(sp, ring=False)
    sp.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except FreeconvError as exc:
        print(f"error:{exc.category}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
