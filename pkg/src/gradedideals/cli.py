"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 precondition violation (e.g. ``socle`` of an ideal that is not m-primary).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .artinian import is_m_primary, socle
from .errors import PreconditionError, UsageError, VerificationError
from .gradedfield import graded_free_basis, parse_matrix
from .idealops import Ideal, eliminate, intersect, quotient, saturate
from .monomial import MonomialIdeal, irreducible_decomposition, minimal_primes_squarefree
from .ring import GradingMap, MonomialOrder, Polynomial, PolynomialRing
from .session import Session, format_ideal, format_points, parse_points, parse_session
from .star import is_graded, star

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Context:
    def __init__(self, args):
        self.session = Session()
        if args.session:
            try:
                with open(args.session, encoding="utf-8") as fh:
                    self.session = parse_session(fh.read())
            except OSError as exc:
                raise UsageError(f"cannot read session file: {exc}") from None
        s = self.session
        order = MonomialOrder.parse(args.order) if args.order else s.order
        if args.ring:
            ring = PolynomialRing.from_string(args.ring)
        else:
            ring = s.ring or PolynomialRing.from_string("QQ[x,y]")
        self.ring = ring.with_order(order)
        self.order = order
        if args.grading:
            self.grading = GradingMap.parse(args.grading)
        else:
            self.grading = s.grading or GradingMap.standard(self.ring.n)

    def ideal(self, text: str) -> Ideal:
        if text.startswith("@"):
            I = self.session.ideal(text)
            if I.ring.variables != self.ring.variables or I.ring.field != self.ring.field:
                raise UsageError(f"{text} lives in {I.ring}, not {self.ring}")
            return Ideal(self.ring, [Polynomial(self.ring, dict(g.data)) for g in I.generators])
        return Ideal.parse(self.ring, text)

    def polynomial(self, text: str):
        return self.ring.parse(text)

    def grading_for(self) -> GradingMap:
        self.grading.check_ring(self.ring)
        return self.grading


def _emit(out, args, command: str, text: str, data):
    if args.format == "json":
        out.write(json.dumps({"command": command, "result": data}, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _gens(I: Ideal) -> list:
    return [s.strip() for s in format_ideal(I).split(", ")] if I.generators else []


def _ideal_result(out, args, command, I: Ideal):
    J = I.canonical()
    _emit(out, args, command, format_ideal(J), {"generators": _gens(J)})


# -- commands -------------------------------------------------------------------


def cmd_gb(ctx, args, out):
    I = ctx.ideal(args.ideal)
    gb = I.groebner(ctx.order)
    J = Ideal(ctx.ring, gb.elements)
    text = format_ideal(J)
    _emit(out, args, "gb", text, {"order": str(ctx.order), "basis": _gens(J)})


def cmd_member(ctx, args, out):
    f = ctx.polynomial(args.polynomial)
    ans = f in ctx.ideal(args.ideal)
    _emit(out, args, "member", "true" if ans else "false", ans)


def cmd_intersect(ctx, args, out):
    _ideal_result(out, args, "intersect", intersect(ctx.ideal(args.ideal), ctx.ideal(args.other)))


def cmd_quotient(ctx, args, out):
    _ideal_result(out, args, "quotient", quotient(ctx.ideal(args.ideal), ctx.ideal(args.other)))


def cmd_saturate(ctx, args, out):
    _ideal_result(out, args, "saturate", saturate(ctx.ideal(args.ideal), ctx.polynomial(args.polynomial)))


def cmd_eliminate(ctx, args, out):
    names = [v.strip() for v in args.variables.split(",") if v.strip()]
    _ideal_result(out, args, "eliminate", eliminate(ctx.ideal(args.ideal), names))


def cmd_star(ctx, args, out):
    _ideal_result(out, args, "star", star(ctx.ideal(args.ideal), ctx.grading_for()).star_ideal)


def cmd_isgraded(ctx, args, out):
    ans = is_graded(ctx.ideal(args.ideal), ctx.grading_for())
    _emit(out, args, "isgraded", "true" if ans else "false", ans)


def cmd_socle(ctx, args, out):
    S = socle(ctx.ideal(args.ideal))
    basis = [str(f) for f in S.elements]
    text = f"rank {S.rank}\nbasis {', '.join(basis)}"
    _emit(out, args, "socle", text, {"rank": S.rank, "basis": basis})


def _monomial(I: Ideal) -> MonomialIdeal:
    return MonomialIdeal.from_ideal(I.canonical())


def cmd_ir(ctx, args, out):
    I = ctx.ideal(args.ideal)
    if is_m_primary(I):
        value, method = socle(I).rank, "socle rank"
    elif all(g.is_monomial() for g in I.canonical().generators):
        value, method = irreducible_decomposition(_monomial(I)).count, "monomial decomposition"
    else:
        raise PreconditionError("ir needs an m-primary ideal or a monomial ideal")
    _emit(out, args, "ir", str(value), {"ir": value, "method": method})


def cmd_decompose(ctx, args, out):
    I = ctx.ideal(args.ideal)
    dec = irreducible_decomposition(_monomial(I))
    names = ctx.ring.variables
    comps = [C.format(names) for C in dec.components]
    _emit(out, args, "decompose", "\n".join(comps) if comps else "(1)", {"count": dec.count, "components": comps})


def cmd_minprimes(ctx, args, out):
    primes = minimal_primes_squarefree(_monomial(ctx.ideal(args.ideal)))
    names = ctx.ring.variables
    comps = ["(" + ", ".join(names[i] for i in p) + ")" for p in primes]
    _emit(out, args, "minprimes", "\n".join(comps) if comps else "(1)", {"primes": comps})


def cmd_gfree(ctx, args, out):
    src = args.matrix
    if src.startswith("@"):
        A = ctx.session.matrix(src)
    else:
        try:
            with open(src, encoding="utf-8") as fh:
                A = parse_matrix(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read matrix file: {exc}") from None
    rep = graded_free_basis(A)
    degs = [",".join(map(str, d)) for d in rep.generator_degrees]
    text = "\n".join(
        [
            f"rank {rep.rank}",
            f"free rank {rep.free_rank}",
            "generator degrees " + ("; ".join(f"({d})" for d in degs) if degs else "none"),
            f"unit pivots only {'true' if rep.unit_pivots_only else 'false'}",
        ]
    )
    data = {
        "rank": rep.rank,
        "free_rank": rep.free_rank,
        "generator_degrees": [list(d) for d in rep.generator_degrees],
        "unit_pivots_only": rep.unit_pivots_only,
    }
    _emit(out, args, "gfree", text, data)


def cmd_points(ctx, args, out):
    pts = ctx.session.point_set(args.points) if args.points.startswith("@") else parse_points(args.points)
    rep = harness.theorem51_check(harness.PointConfiguration(pts))
    S = rep.star_ideal.canonical()
    text = "\n".join(
        [
            f"points {format_points(rep.points)}",
            f"ir(I) {rep.ir_I}",
            f"ir(I*) {rep.ir_Istar}",
            f"bijective {'true' if rep.bijective else 'false'}",
            f"I* {format_ideal(S)}",
        ]
    )
    data = {
        "points": [[str(a), str(b)] for a, b in rep.points],
        "ir_I": rep.ir_I,
        "ir_Istar": rep.ir_Istar,
        "bijective": rep.bijective,
        "star": _gens(S),
        "consistent": rep.consistent,
    }
    _emit(out, args, "points", text, data)
    if not rep.consistent:
        raise VerificationError("star of the point ideal disagrees with the direction count")


def cmd_verify(ctx, args, out):
    if args.suite == "paper":
        results = [harness.reproduce_paper_examples()]
    else:
        results = run_random_suites(args.seed, args.cases)
    if args.format == "json":
        out.write(harness.render(results, "json") + "\n")
    else:
        out.write(harness.render(results, "text", failures_only=args.suite == "random") + "\n")
    if not all(r.passed for r in results):
        raise VerificationError("verification failed")


def run_random_suites(seed: int, cases: int | None = None) -> list:
    """The property suites at their default sizes, or all at ``cases``."""
    def n(default):
        return default if cases is None else cases

    pts = harness.point_configuration_suite(seed, n(200))
    mono = harness.monomial_cross_suite(seed, n(100))
    laws = harness.star_laws_suite(seed, n(100), n(50))
    gf = harness.gradedfield_suite(seed, n(100))
    pool = [I for r in (pts, mono, laws) for I in r.ideals]
    sound = harness.groebner_soundness_suite(pool, seed, n(50))
    return [pts, mono, laws, gf, sound]


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--ring", help='polynomial ring, e.g. "QQ[x,y]" or "GF(32003)[x,y,z]" (default QQ[x,y])')
    common.add_argument("--grading", help='integer weight matrix, e.g. "[[1,1]]" (default: all weights 1)')
    common.add_argument("--order", help="lex, grevlex or elim(k) (default grevlex)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--session", help="session file with named ideals, points and matrices (refer to them as @name)")

    p = _Parser(prog="gradedideals", description="Exact computations with multigraded polynomial ideals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, helptext, *positionals):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        for pos, h in positionals:
            sp.add_argument(pos, help=h)
        sp.set_defaults(func=func)
        return sp

    I = ("ideal", 'comma-separated generators, or @name')
    add("gb", cmd_gb, "reduced Groebner basis", I)
    add("member", cmd_member, "ideal membership", ("polynomial", "polynomial"), I)
    add("intersect", cmd_intersect, "I ∩ J", I, ("other", "second ideal"))
    add("quotient", cmd_quotient, "I : J", I, ("other", "second ideal"))
    add("saturate", cmd_saturate, "I : f^∞", I, ("polynomial", "polynomial f"))
    add("eliminate", cmd_eliminate, "I ∩ k[remaining variables]", I, ("variables", "comma-separated variables"))
    add("star", cmd_star, "largest graded subideal I*", I)
    add("isgraded", cmd_isgraded, "is I graded?", I)
    add("socle", cmd_socle, "socle of R/I for m-primary I", I)
    add("ir", cmd_ir, "index of reducibility", I)
    add("decompose", cmd_decompose, "irreducible decomposition of a monomial ideal", I)
    add("minprimes", cmd_minprimes, "minimal primes of a squarefree monomial ideal", I)
    add("gfree", cmd_gfree, "free basis report for a graded-field matrix", ("matrix", "matrix file or @name"))
    add("points", cmd_points, "compare ir(I) and ir(I*) for a point configuration", ("points", '"(a,b); (c,d)" or @name'))
    v = add("verify", cmd_verify, "run the verification harness")
    v.add_argument("suite", choices=("paper", "random"))
    v.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    v.add_argument("--cases", type=int, default=None, help="cases per suite (default: full sizes)")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        ctx = Context(args)
        args.func(ctx, args, out)
    except VerificationError as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except PreconditionError as exc:
        err.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
