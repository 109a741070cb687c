from fractions import Fraction as F

import pytest

from zigzaginv import farey, zigzag
from zigzaginv.algebraic import sign_at
from zigzaginv.intpoly import IntPolynomial, digit_polynomial
from zigzaginv.invariants import (certified_less, double_cover, lambda_bounds,
                                  monotonicity_scan,
                                  rotation_additivity_check,
                                  singularity_report, surface_polynomials,
                                  zeta_prefix)

P = IntPolynomial


def test_singularity_report():
    rep = singularity_report(3, F(2, 3))
    assert rep.rotation_at_infinity == F(1, 3)
    assert rep.infinity_prongs == 3
    assert rep.one_prong_count == 5
    assert rep.euler_poincare_sum == 4
    rep2 = singularity_report(2, F(7, 12))
    assert rep2.rotation_at_infinity == F(5, 12)
    assert rep2.infinity_prongs == 12


def test_rotation_additivity():
    rep = rotation_additivity_check(F(1, 2), F(2, 3))
    assert rep.mediant == F(3, 5)
    assert rep.rotation_of_mediant == F(2, 5)
    rep2 = rotation_additivity_check(F(4, 7), F(3, 5))
    assert rep2.prongs_of_mediant == 12 == rep2.prong_sum
    rep3 = rotation_additivity_check(F(0, 1), F(1, 5))
    assert rep3.prongs_of_mediant == 6
    with pytest.raises(farey.IncompatibleFractionsError):
        rotation_additivity_check(F(1, 3), F(2, 3))


def test_additivity_on_depth_eight_tree():
    nodes = [q for lvl in range(1, 9) for q in farey.enumerate_level(lvl)]
    pairs = 0
    for i, q1 in enumerate(nodes):
        for q2 in nodes[i + 1:]:
            a, b = min(q1, q2), max(q1, q2)
            if farey.compatible(a, b):
                assert rotation_additivity_check(a, b).holds
                pairs += 1
    assert pairs > 400


def test_zeta_prefix_values():
    z = zeta_prefix(2, F(1, 2), 2)
    assert z.as_integers() == [1, 2, 6]
    z13 = zeta_prefix(2, F(1, 3), 1)
    assert z13.as_integers() == [1, 2]
    for m, q in ((2, F(2, 5)), (3, F(1, 2))):
        assert zeta_prefix(m, q, 4).coeffs[0] == 1
    with pytest.raises(ValueError):
        zeta_prefix(2, F(1, 2), 13)


def test_zeta_prefix_with_oracle():
    zeta_prefix(2, F(1, 2), 4, check_fixed_upto=4)
    zeta_prefix(3, F(1, 2), 3, check_fixed_upto=3)


def test_surface_polynomials_even_case():
    sp = surface_polynomials(2, F(1, 2))
    assert sp.puncture == P([1, 1])
    assert sp.symplectic == P([1, -3, 1])
    assert sp.homology == P([1, -2, -2, 1])
    assert sp.chi_plus == sp.homology
    assert sp.chi_minus == P([-1, -2, 2, 1]).monic_normalized()


def test_surface_polynomials_odd_case():
    sp = surface_polynomials(2, F(1, 3))
    assert sp.puncture == P([1])
    assert sp.symplectic == sp.homology
    assert sp.homology(-1) == 6


def test_puncture_parity_sweep():
    # even postcritical count forces the t+1 factor; the converse fails
    # (4/15 has n = 17 odd and still D(-1) = 0), so only the implication
    # is asserted
    for m in (2, 3):
        for q in farey.iter_reduced(15):
            d = digit_polynomial(m, q)
            n = q.denominator + 2
            if n % 2 == 0:
                assert d(-1) == 0, f"(m={m}, q={q})"
            assert d(1) != 0
    assert digit_polynomial(2, F(4, 15))(-1) == 0  # the odd-n exception


def test_double_cover():
    c4 = double_cover(2, F(1, 2))      # n = 4
    assert (c4.genus, c4.punctures) == (1, 6)
    assert c4.homology_rank_split == (4, 3)
    c5 = double_cover(2, F(1, 3))      # n = 5
    assert (c5.genus, c5.punctures) == (2, 6)
    assert c5.homology_rank_split == (5, 4)


def test_lambda_bounds():
    inf2, sup2 = lambda_bounds(2)
    assert sup2 == 3
    assert inf2.interval == (F(2), F(2))
    inf3, sup3 = lambda_bounds(3)
    assert sup3 == 4
    assert sign_at(P([2, -4, 1]), inf3) == 0       # 2 + sqrt(2)
    assert abs(float(inf3) - 3.414213562373095) < 1e-10
    _, sup4 = lambda_bounds(4)
    assert sup4 == 5


def test_monotonicity_scan_small():
    rep = monotonicity_scan(2, 3)
    assert rep.ok
    qs = [r.q for r in rep.rows]
    assert qs == [F(1, 3), F(1, 2), F(2, 3)]
    lams = [float(r.lam) for r in rep.rows]
    assert abs(lams[0] - 2.2966) < 1e-3
    assert abs(lams[1] - 2.6180) < 1e-3
    assert lams[0] < lams[1] < lams[2]
    for r in rep.rows:
        lo, hi = r.lam.interval
        assert 2 <= lo and hi <= 3


def test_certified_less_refines_through_close_values():
    from zigzaginv.algebraic import perron_root
    a = perron_root(2, digit_polynomial(2, F(28, 29)), F(1, 10 ** 10))
    b = perron_root(2, digit_polynomial(2, F(29, 30)), F(1, 10 ** 10))
    assert certified_less(a, b)
    assert not certified_less(b, a)


def test_scan_with_modest_denominator():
    for m in (2, 3):
        rep = monotonicity_scan(m, 12)
        assert rep.ok, rep.violations[:3]
