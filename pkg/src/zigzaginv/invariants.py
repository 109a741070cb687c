"""Surface-level invariants derived from the one-dimensional data.

Everything here is an exact identity check or an exact enclosure: rotation
numbers and prong counts come out of rational arithmetic, the polynomial
identities are integer equalities, and the monotonicity scan compares
certified stretch-factor enclosures that are refined until disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import farey, zigzag
from .algebraic import AlgebraicReal, largest_root_in
from .intpoly import (IntPolynomial, PowerSeriesPrefix, digit_polynomial,
                      exact_div, exp_from_counts, reverse, series_reciprocal,
                      trace_powers)


@dataclass(frozen=True)
class SingularityReport:
    """Singularity data of the surface map attached to (m, q)."""

    m: int
    q: Fraction
    one_prong_count: int
    infinity_prongs: int
    rotation_at_infinity: Fraction
    euler_poincare_sum: int


def singularity_report(m: int, q: Fraction) -> SingularityReport:
    """Prong counts and the rotation number at infinity, cross-derived.

    The rotation number is 1 - q; it is recomputed from the permutation
    model (k-1 clicks of the n-1 prongs, where the prong action is the
    rotation obtained by deleting the top symbol) and both routes must
    agree.
    """
    farey.require_interior(q)
    b = q.denominator
    p = b + 2                       # one-prong singularities
    rotation = 1 - q
    n, k = zigzag.nk_of(q)
    perm = zigzag.permutation(m, n, k)
    if not perm.matches_rotation():
        raise ArithmeticError(f"prong action is not the expected rotation at {q}")
    via_perm = Fraction(k - 1, n - 1)
    if via_perm != rotation:
        raise ArithmeticError(
            f"rotation mismatch at {q}: {via_perm} vs {rotation}")
    ep = p * (2 - 1) + (2 - (p - 2))
    if ep != 4:
        raise ArithmeticError(f"Euler-Poincare sum {ep} != 4 at {q}")
    return SingularityReport(m, q, p, b, rotation, ep)


@dataclass(frozen=True)
class AdditivityReport:
    q1: Fraction
    q2: Fraction
    mediant: Fraction
    rotation_of_mediant: Fraction
    rotation_mediant_of_rotations: Fraction
    prongs_of_mediant: int
    prong_sum: int

    @property
    def holds(self) -> bool:
        return (self.rotation_of_mediant == self.rotation_mediant_of_rotations
                and self.prongs_of_mediant == self.prong_sum)


def rotation_additivity_check(q1: Fraction, q2: Fraction) -> AdditivityReport:
    """Rotation numbers add as mediants and prong counts add as integers."""
    med = farey.mediant(q1, q2)
    rot = 1 - med
    rot_sum = farey.mediant(1 - q2, 1 - q1)  # complements swap the order
    report = AdditivityReport(
        q1=q1, q2=q2, mediant=med,
        rotation_of_mediant=rot,
        rotation_mediant_of_rotations=rot_sum,
        prongs_of_mediant=med.denominator,
        prong_sum=q1.denominator + q2.denominator,
    )
    if not report.holds:
        raise ArithmeticError(f"additivity fails for {q1}, {q2}")
    return report


ZETA_ORDER_GUARD = 12


def zeta_prefix(m: int, q: Fraction, order: int,
                check_fixed_upto: int = 0,
                zz: zigzag.ZigZagMap | None = None) -> PowerSeriesPrefix:
    """Prefix of the dynamical zeta function 1/reverse(digit polynomial).

    Cross-checked against exp(sum trace(W^i) t^i / i) for the weak Markov
    matrix W, and optionally against the branch-counting oracle for
    iterates up to `check_fixed_upto`.
    """
    if order > ZETA_ORDER_GUARD:
        raise ValueError(f"order {order} exceeds the guard {ZETA_ORDER_GUARD}")
    d = digit_polynomial(m, q)
    prefix = series_reciprocal(reverse(d), order)
    if zz is None:
        zz = zigzag.build(m, q)
    weak = zigzag.weak_markov(zz)
    counts = trace_powers([list(r) for r in weak.matrix], max(order, 1))
    via_traces = exp_from_counts(counts, order)
    if prefix != via_traces:
        raise ArithmeticError(f"zeta prefixes disagree at (m={m}, q={q})")
    if check_fixed_upto:
        oracle = zigzag.fixed_point_counts(zz, check_fixed_upto)
        for i in range(1, check_fixed_upto + 1):
            if oracle[i - 1] != counts[i - 1]:
                raise ArithmeticError(
                    f"fixed point count {oracle[i - 1]} != trace "
                    f"{counts[i - 1]} for iterate {i} at (m={m}, q={q})")
    return prefix


@dataclass(frozen=True)
class SurfacePolynomials:
    homology: IntPolynomial
    symplectic: IntPolynomial
    puncture: IntPolynomial
    chi_plus: IntPolynomial
    chi_minus: IntPolynomial


def surface_polynomials(m: int, q: Fraction,
                        zz: zigzag.ZigZagMap | None = None,
                        verify_signed: bool = True) -> SurfacePolynomials:
    """Homology, symplectic, puncture and double-cover polynomials.

    The homology polynomial is the digit polynomial; the puncture factor is
    t + 1 exactly when the postcritical count is even, and the division is
    required to be exact.  The signed transition matrix provides the
    independent route: its characteristic polynomial must be chi_plus or
    chi_minus.
    """
    d = digit_polynomial(m, q)
    n = q.denominator + 2
    t_plus_1 = IntPolynomial([1, 1])
    if n % 2 == 0:
        puncture = t_plus_1
        symplectic = exact_div(d, t_plus_1)
    else:
        puncture = IntPolynomial([1])
        symplectic = d
    if d(1) == 0:
        raise ArithmeticError(f"digit polynomial vanishes at 1 for {q}")
    chi_plus = d
    chi_minus = d.compose_neg().monic_normalized()
    if verify_signed:
        if zz is None:
            zz = zigzag.build(m, q)
        signed = zigzag.signed_markov(zz).char_poly()
        if signed not in (chi_plus, chi_minus):
            raise ArithmeticError(
                f"signed matrix polynomial matches neither cover lift at "
                f"(m={m}, q={q})")
    return SurfacePolynomials(d, symplectic, puncture, chi_plus, chi_minus)


@dataclass(frozen=True)
class DoubleCoverData:
    genus: int
    punctures: int
    homology_rank_split: tuple


def double_cover(m: int, q: Fraction) -> DoubleCoverData:
    """Genus and puncture count of the orientation double cover."""
    farey.require_interior(q)
    n = q.denominator + 2
    if n % 2 == 1:
        genus, punctures = (n - 1) // 2, n + 1
    else:
        genus, punctures = (n - 2) // 2, n + 2
    return DoubleCoverData(genus, punctures, (n, n - 1))


def lambda_bounds(m: int) -> tuple[AlgebraicReal, Fraction]:
    """Infimum and supremum of the stretch factors at modality m.

    The infimum is the larger root of t**2 - (m+1)t + 2 (the closed form
    (m+1+sqrt((m+1)**2-8))/2); the supremum is m + 1 exactly.
    """
    if m < 2:
        raise ValueError("modality must be at least 2")
    poly = IntPolynomial([2, -(m + 1), 1])
    inf_root = largest_root_in(poly, m - 1, m + 1)
    return inf_root, Fraction(m + 1)


@dataclass(frozen=True)
class ScanRow:
    q: Fraction
    lam: AlgebraicReal

    def interval(self):
        return self.lam.interval


@dataclass(frozen=True)
class ScanReport:
    m: int
    max_den: int
    rows: tuple
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


REFINEMENT_FLOOR = Fraction(1, 1 << 400)


def certified_less(a: AlgebraicReal, b: AlgebraicReal,
                   floor: Fraction = REFINEMENT_FLOOR) -> bool:
    """Decide a < b by refining both enclosures until they separate.

    Distinct algebraic numbers always separate; the floor only guards
    against an upstream bug handing us the same number twice, in which
    case False is returned (and the caller reports a violation).
    """
    while True:
        alo, ahi = a.interval
        blo, bhi = b.interval
        if ahi < blo:
            return True
        if bhi < alo:
            return False
        if a.width < floor and b.width < floor:
            return False
        a.refine(a.width / 2 if a.width >= floor else a.width)
        b.refine(b.width / 2 if b.width >= floor else b.width)


def monotonicity_scan(m: int, max_den: int,
                      width: Fraction = Fraction(1, 10 ** 10)) -> ScanReport:
    """Certified stretch factors for every q with den <= max_den, in order.

    Enclosures start at the requested width and neighbors are refined until
    disjoint; the scan asserts strict increase with q, monotonicity of the
    two edge families, and that every enclosure stays inside [m, m+1] (the
    root itself is certified interior at isolation time).  Violations are
    collected, not raised.
    """
    if max_den < 2:
        raise ValueError("max_den must be at least 2")
    rows = []
    violations = []
    for q in farey.iter_reduced(max_den):
        lam = _isolated_lambda(m, q, width)
        lo, hi = lam.interval
        if lo < m or hi > m + 1:
            violations.append((q, f"enclosure [{lo}, {hi}] leaves [{m}, {m + 1}]"))
        rows.append(ScanRow(q, lam))
    for r1, r2 in zip(rows, rows[1:]):
        if not certified_less(r1.lam, r2.lam):
            violations.append(
                (r2.q, f"stretch factor not strictly above the one for {r1.q}"))
    # edge families: lambda(1/n) decreasing, lambda((n-1)/n) increasing
    prev = None
    for n in range(2, max_den + 1):
        cur = _isolated_lambda(m, Fraction(1, n), width)
        if prev is not None and not certified_less(cur, prev):
            violations.append((Fraction(1, n), "1/n family is not decreasing"))
        prev = cur
    prev = None
    for n in range(2, max_den + 1):
        cur = _isolated_lambda(m, Fraction(n - 1, n), width)
        if prev is not None and not certified_less(prev, cur):
            violations.append(
                (Fraction(n - 1, n), "(n-1)/n family is not increasing"))
        prev = cur
    return ScanReport(m, max_den, tuple(rows), tuple(violations))


def _isolated_lambda(m: int, q: Fraction, width: Fraction) -> AlgebraicReal:
    from .algebraic import perron_root
    return perron_root(m, digit_polynomial(m, q), width)
