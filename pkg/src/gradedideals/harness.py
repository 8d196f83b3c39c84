"""Verification harness: the worked examples and seeded property suites.

Each check produces a :class:`CheckRecord` (name, expected, got, passed);
suites collect them in a :class:`SuiteResult` that renders as a text table
or JSON.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .artinian import is_m_primary, socle
from .errors import UsageError
from .gradedfield import (
    GradedFieldPresentation,
    Homogeneous,
    HomogeneousMatrix,
    graded_free_basis,
    specialized_rank,
)
from .idealops import Ideal, ideal_equal, intersect
from .linalg import EchelonSpace
from .monomial import MonomialIdeal, irreducible_decomposition
from .ring import GradingMap, Polynomial, PolynomialRing
from .scalar import GF, QQ, Field
from .star import is_graded, star, star_of_prime_check, star_truncated_oracle

DEFAULT_SEED = 20240601
PROPERTY_PRIME = 32003


@dataclass
class CheckRecord:
    name: str
    expected: object
    got: object
    passed: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": _jsonable(self.expected), "got": _jsonable(self.got), "pass": self.passed}


def _jsonable(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


@dataclass
class SuiteResult:
    name: str
    records: list = field(default_factory=list)
    seed: int | None = None
    elapsed: float = 0.0
    ideals: list = field(default_factory=list)

    def check(self, name, expected, got, passed=None) -> bool:
        ok = (expected == got) if passed is None else bool(passed)
        self.records.append(CheckRecord(name, expected, got, ok))
        return ok

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list:
        return [r for r in self.records if not r.passed]

    def table(self, failures_only: bool = False) -> str:
        rows = self.failures if failures_only else self.records
        head = f"== {self.name}" + (f" (seed {self.seed})" if self.seed is not None else "")
        lines = [head]
        for r in rows:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: expected {r.expected}, got {r.got}")
        lines.append(
            f"-- {len(self.records) - len(self.failures)}/{len(self.records)} checks passed"
            f" in {self.elapsed:.2f}s"
        )
        return "\n".join(lines)

    def summary(self) -> dict:
        return {
            "suite": self.name,
            "seed": self.seed,
            "passed": self.passed,
            "checks": len(self.records),
            "failures": len(self.failures),
            "records": [r.as_dict() for r in self.records],
        }


# -- point configurations ------------------------------------------------------


@dataclass
class PointConfiguration:
    """Distinct points of the affine plane, none at the origin."""

    points: list
    field: Field = QQ

    def __post_init__(self):
        pts = [(self.field.convert(a), self.field.convert(b)) for a, b in self.points]
        if len(set(pts)) != len(pts):
            raise UsageError(f"points must be pairwise distinct: {self.points}")
        if any(not a and not b for a, b in pts):
            raise UsageError("the origin is not allowed in a point configuration")
        self.points = pts

    def __len__(self):
        return len(self.points)

    def ring(self) -> PolynomialRing:
        return PolynomialRing(self.field, ["x", "y"])


def direction(F: Field, a, b) -> tuple:
    """Canonical representative of the projective point [a : b]."""
    if a:
        return (F.one, F.div(b, a))
    return (F.zero, F.one)


def point_ideal(R: PolynomialRing, a, b) -> Ideal:
    x, y = R.gens
    return Ideal(R, [x - R.constant(a), y - R.constant(b)])


def line_ideal(R: PolynomialRing, a, b) -> Ideal:
    x, y = R.gens
    return Ideal(R, [R.constant(b) * x - R.constant(a) * y])


def ideal_of_points(P: PointConfiguration, ring: PolynomialRing | None = None) -> Ideal:
    R = ring or P.ring()
    result = None
    for a, b in P.points:
        p = point_ideal(R, a, b)
        result = p if result is None else intersect(result, p)
    if result is None:
        return Ideal(R, [R.one])
    return result.canonical()


@dataclass
class StarComparisonReport:
    points: list
    ideal: Ideal
    ir_I: int
    ir_Istar: int
    bijective: bool
    star_ideal: Ideal
    predicted: Ideal
    star_matches_prediction: bool
    star_generator_degree: int
    details: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return (
            self.ir_I >= self.ir_Istar
            and self.bijective == (self.ir_I == self.ir_Istar)
            and self.star_matches_prediction
            and self.star_generator_degree == self.ir_Istar
        )


def theorem51_check(P: PointConfiguration, per_point: bool = True) -> StarComparisonReport:
    """Compare ir(I) = #points with ir(I*) = #directions for the ideal of P."""
    R = P.ring()
    F = R.field
    W = GradingMap.standard(2)
    I = ideal_of_points(P, R)
    S = star(I, W).star_ideal
    dirs = {}
    for a, b in P.points:
        dirs.setdefault(direction(F, a, b), (a, b))
    predicted = None
    for a, b in dirs.values():
        L = line_ideal(R, a, b)
        predicted = L if predicted is None else intersect(predicted, L)
    matches = ideal_equal(S, predicted)
    gens = S.groebner().elements
    star_deg = gens[0].total_degree() if len(gens) == 1 else -1
    details = []
    if per_point:
        for a, b in P.points:
            rep = star_of_prime_check(point_ideal(R, a, b), W)
            details.append(((a, b), rep))
    ir_I, ir_star = len(P.points), len(dirs)
    return StarComparisonReport(
        points=list(P.points),
        ideal=I,
        ir_I=ir_I,
        ir_Istar=ir_star,
        bijective=ir_I == ir_star,
        star_ideal=S,
        predicted=predicted,
        star_matches_prediction=matches,
        star_generator_degree=star_deg,
        details=details,
    )


# -- worked examples ------------------------------------------------------------


def _ideal(R, text):
    return Ideal.parse(R, text)


def _same_generators(I: Ideal, J: Ideal) -> bool:
    return ideal_equal(I, J)


def reproduce_paper_examples() -> SuiteResult:
    res = SuiteResult("worked examples")
    t0 = time.perf_counter()
    R = PolynomialRing(QQ, ["x", "y"])
    std = GradingMap.standard(2)
    fine = GradingMap.fine(2)

    # I = (x^2, xy, y^3, x - y^2): reducible star of an irreducible ideal
    I = _ideal(R, "x^2, x*y, y^3, x - y^2")
    S = star(I, std).star_ideal
    res.ideals += [I, S]
    res.check("tail-ideal I* = (x^2, x*y, y^3)", True, _same_generators(S, _ideal(R, "x^2, x*y, y^3")))
    res.check("tail-ideal I not graded", False, is_graded(I, std))
    res.check("tail-ideal I m-primary", True, is_m_primary(I))
    res.check("tail-ideal I* m-primary", True, is_m_primary(S))
    soc_I, soc_S = socle(I), socle(S)
    res.check("tail-ideal soc(I) rank", 1, soc_I.rank)
    res.check("tail-ideal soc(I) = k*x", True, soc_I.spans(R("x")))
    res.check("tail-ideal soc(I*) rank", 2, soc_S.rank)
    res.check("tail-ideal soc(I*) = k*x + k*y^2", True, soc_S.spans(R("x")) and soc_S.spans(R("y^2")))
    res.check("tail-ideal ir(I)", 1, soc_I.rank)
    res.check("tail-ideal ir(I*)", 2, soc_S.rank)
    res.check("tail-ideal ir(I*) by decomposition", 2, irreducible_decomposition(MonomialIdeal.from_ideal(S)).count)

    # I = (x^4, x^2y^2, y^4, x^3y - xy^3). The binomial is homogeneous for the
    # standard grading, so I* = (x^4, x^2y^2, y^4) needs the fine Z^2-grading.
    I = _ideal(R, "x^4, x^2*y^2, y^4, x^3*y - x*y^3")
    S = star(I, fine).star_ideal
    res.ideals += [I, S]
    res.check("quartic I* = (x^4, x^2*y^2, y^4) under the Z^2-grading", True, _same_generators(S, _ideal(R, "x^4, x^2*y^2, y^4")))
    res.check("quartic I m-primary", True, is_m_primary(I))
    res.check("quartic I* m-primary", True, is_m_primary(S))
    soc_I, soc_S = socle(I), socle(S)
    res.check("quartic soc(I*) rank", 2, soc_S.rank)
    res.check("quartic soc(I*) = k*x^3y + k*xy^3", True, soc_S.spans(R("x^3*y")) and soc_S.spans(R("x*y^3")))
    res.check("quartic soc(I) rank", 3, soc_I.rank)
    for rep in ("x^3*y", "x^3 - x*y^2", "x^2*y - y^3"):
        res.check(f"quartic {rep} in soc(I)", True, soc_I.spans(R(rep)))
    res.check("quartic ir(I)", 3, soc_I.rank)
    res.check("quartic ir(I*)", 2, soc_S.rank)
    res.check("quartic ir(I*) by decomposition", 2, irreducible_decomposition(MonomialIdeal.from_ideal(S)).count)
    res.check("quartic I is graded for the standard Z-grading", True, is_graded(I, std))
    res.check("quartic standard-grading I* = I", True, _same_generators(star(I, std).star_ideal, I))

    # I = (x, (y-1)...(y-r)): the r points share a single direction
    y = R("y")
    for r in (1, 2, 3):
        poly = R.one
        for a in range(1, r + 1):
            poly = poly * (y - a)
        I = Ideal(R, [R("x"), poly])
        S = star(I, std).star_ideal
        res.ideals += [I, S]
        res.check(f"collinear r={r} I* = (x)", True, _same_generators(S, _ideal(R, "x")))
        P = PointConfiguration([(0, a) for a in range(1, r + 1)])
        res.check(f"collinear r={r} ideal of points = I", True, ideal_equal(ideal_of_points(P, R), I))
        rep = theorem51_check(P)
        res.check(f"collinear r={r} ir(I)", r, rep.ir_I)
        res.check(f"collinear r={r} ir(I*)", 1, rep.ir_Istar)
        res.check(f"collinear r={r} bijective", r == 1, rep.bijective)
        res.check(f"collinear r={r} star matches line ideal", True, rep.star_matches_prediction)
    res.elapsed = time.perf_counter() - t0
    return res


# -- random generators ------------------------------------------------------------


def random_point_configuration(rng: random.Random, max_points: int = 6, bound: int = 5) -> PointConfiguration:
    k = rng.randint(1, max_points)
    pts: list = []
    while len(pts) < k:
        p = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if p != (0, 0) and p not in pts:
            pts.append(p)
    return PointConfiguration(pts)


def random_m_primary_monomial_ideal(rng: random.Random, max_vars: int = 3, max_power: int = 6) -> MonomialIdeal:
    n = rng.randint(1, max_vars)
    powers = [rng.randint(1, max_power) for _ in range(n)]
    gens = []
    for i, a in enumerate(powers):
        gens.append(tuple(a if k == i else 0 for k in range(n)))
    for _ in range(rng.randint(0, 4)):
        gens.append(tuple(rng.randint(0, a - 1) for a in powers))
    gens = [g for g in gens if any(g)]
    return MonomialIdeal(n, gens)


def random_polynomial(rng: random.Random, R: PolynomialRing, max_degree: int, max_terms: int, min_degree: int = 0, min_terms: int = 1) -> Polynomial:
    data = {}
    F = R.field
    for _ in range(rng.randint(min_terms, max_terms)):
        d = rng.randint(min_degree, max_degree)
        e = _random_exponent(rng, R.n, d)
        c = F.convert(rng.randint(1, F.characteristic - 1 if F.characteristic else 9))
        data[e] = F.add(data.get(e, F.zero), c)
    return Polynomial(R, {e: c for e, c in data.items() if c})


def _random_exponent(rng, n, d):
    cuts = sorted(rng.randint(0, d) for _ in range(n - 1))
    bounds = [0] + cuts + [d]
    return tuple(bounds[i + 1] - bounds[i] for i in range(n))


def random_homogeneous_polynomial(rng, R, W: GradingMap, max_degree: int, max_terms: int) -> Polynomial:
    f = random_polynomial(rng, R, max_degree, max_terms, min_degree=1)
    if f.is_zero():
        return f
    e0 = max(f.data, key=R.order.keyfunc())
    deg = W.degree(e0)
    return Polynomial(R, {e: c for e, c in f.data.items() if W.degree(e) == deg})


def random_grading(rng: random.Random, n: int) -> GradingMap:
    kind = rng.choice(["standard", "weights", "fine"])
    if kind == "standard":
        return GradingMap.standard(n)
    if kind == "fine":
        return GradingMap.fine(n)
    return GradingMap([[rng.randint(1, 3) for _ in range(n)]])


def random_ideal(rng: random.Random, R: PolynomialRing, W: GradingMap, max_gens=4, max_degree=4, max_terms=3) -> Ideal:
    """Sparse random ideal without constant terms; about a third are homogeneous."""
    homogeneous = rng.random() < 0.35
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        if homogeneous:
            g = random_homogeneous_polynomial(rng, R, W, max_degree, max_terms)
        else:
            g = random_polynomial(rng, R, max_degree, max_terms + 1, min_degree=1, min_terms=2)
        gens.append(g)
    return Ideal(R, gens)


def random_homogeneous_matrix(rng: random.Random, p: int = PROPERTY_PRIME):
    F = GF(p)
    lattice_gens = rng.choice(
        [[(1, 0), (0, 1)], [(1, 1), (0, 2)], [(2, 0), (0, 3)], [(1, -1)], [(1, 2), (3, 1)]]
    )
    k = GradedFieldPresentation.create(F, 2, lattice_gens)
    basis = k.lattice.basis
    reps = [(0, 0), (1, 0)]

    def lattice_point():
        v = (0, 0)
        for b in basis:
            c = rng.randint(-2, 2)
            v = (v[0] + c * b[0], v[1] + c * b[1])
        return v

    rows, cols = rng.randint(1, 5), rng.randint(1, 5)
    rowdeg = [tuple(a + b for a, b in zip(lattice_point(), rng.choice(reps))) for _ in range(rows)]
    coldeg = [tuple(a + b for a, b in zip(lattice_point(), rng.choice(reps))) for _ in range(cols)]
    entries = []
    for r in rowdeg:
        row = []
        for c in coldeg:
            d = (r[0] - c[0], r[1] - c[1])
            if d in k.lattice and rng.random() < 0.7:
                row.append(Homogeneous(F(rng.randint(1, p - 1)), d))
            else:
                row.append(None)
        entries.append(row)
    return HomogeneousMatrix(k, rowdeg, coldeg, entries)


# -- suites -------------------------------------------------------------------------


def point_configuration_suite(seed: int = DEFAULT_SEED, cases: int = 200) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("ir(I) >= ir(I*) on random point configurations", seed=seed)
    t0 = time.perf_counter()
    for case in range(cases):
        P = random_point_configuration(rng)
        rep = theorem51_check(P)
        pts = [(str(a), str(b)) for a, b in P.points]
        res.check(f"case {case} ir(I) >= ir(I*) {pts}", True, rep.ir_I >= rep.ir_Istar)
        res.check(f"case {case} equality iff injective", rep.bijective, rep.ir_I == rep.ir_Istar)
        res.check(f"case {case} I* = product of line ideals", True, rep.star_matches_prediction)
        res.check(f"case {case} deg of I* generator = #directions", rep.ir_Istar, rep.star_generator_degree)
        res.check(
            f"case {case} each p* graded prime",
            True,
            all(r.graded and r.is_prime for _, r in rep.details),
        )
        stars = [r.star_ideal for _, r in rep.details]
        inter = stars[0]
        for s in stars[1:]:
            inter = intersect(inter, s)
        res.check(f"case {case} star(∩p) = ∩star(p)", True, ideal_equal(rep.star_ideal, inter))
        res.ideals += [rep.ideal, rep.star_ideal]
    res.elapsed = time.perf_counter() - t0
    return res


def monomial_cross_suite(seed: int = DEFAULT_SEED, cases: int = 100) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("decomposition count = socle rank (monomial, m-primary)", seed=seed)
    t0 = time.perf_counter()
    for case in range(cases):
        M = random_m_primary_monomial_ideal(rng)
        names = ["x", "y", "z"][: M.n]
        R = PolynomialRing(QQ, names)
        dec = irreducible_decomposition(M)
        I = M.to_ideal(R)
        rank = socle(I).rank
        res.ideals.append(I)
        res.check(f"case {case} {M.format(names)}", dec.count, rank)
    res.elapsed = time.perf_counter() - t0
    return res


def star_laws_suite(seed: int = DEFAULT_SEED, cases: int = 100, pairs: int = 50) -> SuiteResult:
    rng = random.Random(seed)
    F = GF(PROPERTY_PRIME)
    res = SuiteResult(f"star laws over {F}", seed=seed)
    t0 = time.perf_counter()
    for case in range(cases):
        n = rng.choice((1, 2, 2, 3, 3))
        R = PolynomialRing(F, ["x", "y", "z"][:n])
        W = random_grading(rng, n)
        I = random_ideal(rng, R, W)
        S = star(I, W).star_ideal
        res.ideals += [I, S]
        tag = f"case {case} W={W} I=({I})"
        res.check(f"{tag} star(I) ⊆ I", True, I.contains_ideal(S))
        res.check(f"{tag} star idempotent", True, ideal_equal(star(S, W).star_ideal, S))
        res.check(f"{tag} star(I) graded", True, is_graded(S, W))
        res.check(f"{tag} is_graded(I) iff star(I) = I", is_graded(I, W), ideal_equal(S, I))
        col = [sum(W.column(j)) for j in range(n)]
        top = max(
            (sum(c * x for c, x in zip(col, e)) for g in S.groebner() for e in g.data), default=0
        )
        res.check(f"{tag} star = truncated oracle (D={top})", True, ideal_equal(star_truncated_oracle(I, W, top), S))
    for case in range(pairs):
        n = rng.choice((1, 2, 2, 3, 3))
        R = PolynomialRing(F, ["x", "y", "z"][:n])
        W = random_grading(rng, n)
        I = random_ideal(rng, R, W, max_gens=3, max_degree=3)
        J = random_ideal(rng, R, W, max_gens=3, max_degree=3)
        lhs = star(intersect(I, J), W).star_ideal
        rhs = intersect(star(I, W).star_ideal, star(J, W).star_ideal)
        res.ideals += [I, J, lhs]
        res.check(f"pair {case} W={W} star(I∩J) = star(I)∩star(J) I=({I}) J=({J})", True, ideal_equal(lhs, rhs))
    res.elapsed = time.perf_counter() - t0
    return res


def gradedfield_suite(seed: int = DEFAULT_SEED, cases: int = 100) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("graded-field elimination (GF(p)[Z^2])", seed=seed)
    t0 = time.perf_counter()
    for case in range(cases):
        A = random_homogeneous_matrix(rng)
        rep = graded_free_basis(A)
        res.check(f"case {case} unit pivots only", True, rep.unit_pivots_only)
        res.check(f"case {case} rank + free rank = rows", A.rows, rep.rank + rep.free_rank)
        point = [rng.randint(1, PROPERTY_PRIME - 1) for _ in range(2)]
        res.check(f"case {case} rank = specialized rank", specialized_rank(A, point), rep.rank)
        rp = list(range(A.rows))
        cp = list(range(A.cols))
        rng.shuffle(rp)
        rng.shuffle(cp)
        res.check(f"case {case} rank invariant under shuffles", rep.rank, graded_free_basis(A.permuted(rp, cp)).rank)
    res.elapsed = time.perf_counter() - t0
    return res


def truncated_membership_oracle(f: Polynomial, I: Ideal, D: int) -> bool:
    """f ∈ span{m*g : g a generator of I, m a monomial, deg(m*g) <= D}."""
    from .star import monomials_up_to_weight

    R = I.ring
    F = R.field
    index: dict = {}

    def vec(p):
        return {index.setdefault(e, len(index)): c for e, c in p.data.items()}

    space = EchelonSpace(F)
    for g in I.generators:
        dg = g.total_degree()
        for e in monomials_up_to_weight([1] * R.n, D - dg):
            space.insert(vec(g.mul_term(F.one, e)))
    return space.contains(vec(f))


def groebner_soundness_suite(ideals: Sequence[Ideal], seed: int = DEFAULT_SEED, pairs: int = 50) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("Groebner engine soundness", seed=seed)
    t0 = time.perf_counter()
    seen = {}
    for I in ideals:
        seen.setdefault((I.ring, I.generators), I)
    unique = list(seen.values())
    for k, I in enumerate(unique):
        gb = I.groebner()
        res.check(f"ideal {k} ({I}) S-polynomials reduce to 0", True, gb.spolynomials_reduce_to_zero())
        res.check(f"ideal {k} generators reduce to 0", True, all(gb.contains(g) for g in I.generators))
        res.check(f"ideal {k} basis reduced", True, gb.is_reduced())
    pool = [I for I in unique if I.generators and max(g.total_degree() for g in I.generators) <= 4]
    for case in range(pairs):
        I = rng.choice(pool)
        R = I.ring
        f = R.zero
        top = 0
        for g in I.generators:
            if rng.random() < 0.7:
                h = random_polynomial(rng, R, 2, 2)
                f = f + h * g
                top = max(top, h.total_degree() + g.total_degree())
        if rng.random() < 0.5:
            f = f + R.monomial(_random_exponent(rng, R.n, rng.randint(0, 3)), rng.randint(1, 9))
        D = max(top, f.total_degree(), 0) + 2
        res.check(
            f"pair {case} f={f} I=({I}) membership vs span oracle (D={D})",
            truncated_membership_oracle(f, I, D),
            f in I,
        )
    res.elapsed = time.perf_counter() - t0
    return res


def render(results: Sequence[SuiteResult], fmt: str = "text", failures_only: bool = False) -> str:
    if fmt == "json":
        return json.dumps([r.summary() for r in results], indent=2)
    return "\n\n".join(r.table(failures_only=failures_only) for r in results)
