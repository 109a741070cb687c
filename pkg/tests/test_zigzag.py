import json
from fractions import Fraction as F

import pytest

from zigzaginv import farey, zigzag
from zigzaginv.algebraic import compare
from zigzaginv.intpoly import IntPolynomial, trace_powers
from zigzaginv.zigzag import (AdmissibilityError, ResourceGuardError,
                              build, count_fixed_numeric, fixed_point_counts,
                              nk_of, permutation, phi_of, signed_markov,
                              strong_markov, weak_markov)

P = IntPolynomial


def test_permutation_examples():
    rho = permutation(4, 3, 2)
    assert rho.mapping == {1: 3, 2: 1, 3: 2}
    rho42 = permutation(4, 4, 2)
    assert rho42.mapping == {1: 4, 2: 1, 3: 2, 4: 3}
    assert phi_of(4, 2) == F(2, 3)
    assert rho42.is_transitive()


def test_permutation_flavors():
    rho2 = permutation(2, 3, 2)
    assert rho2.mapping == {1: 3, 2: 1, 3: 2}     # kappa(3,2) is the identity
    rho2b = permutation(2, 4, 3)
    assert rho2b.mapping == {1: 3, 2: 4, 3: 2, 4: 1}
    rho_o = permutation(3, 3, 2)
    assert rho_o.mapping == {0: 3, 1: 0, 2: 1, 3: 2}


def test_permutation_admissibility():
    with pytest.raises(AdmissibilityError):
        permutation(2, 5, 3)  # gcd(2, 4) = 2
    with pytest.raises(ValueError):
        permutation(2, 3, 5)


def test_prong_rotation():
    for n, k in ((4, 2), (5, 2), (7, 4), (8, 3)):
        if zigzag.gcd(n - k, n - 1) == 1:
            assert permutation(4, n, k).matches_rotation()


def test_build_orbit_golden_mean():
    zz = build(2, F(1, 2))
    assert [x.poly for x in zz.orbit] == [P([1]), P([-2, 1]), P([2, 2, -1])]
    order = [tag for _, tag in zz.sorted_postcritical()]
    assert order == ["zero", 2, 1, 0]             # 0 < 3-lam < lam-2 < 1
    assert zz.sign_at_zero == 0
    assert build(3, F(1, 2)).sign_at_zero == 1


def test_spatial_action_matches_permutation_model():
    for m in (2, 3, 4, 5):
        for q in farey.iter_reduced(8):
            zz = build(m, q)
            n, k = nk_of(q)
            assert zz.permutation_type().mapping == \
                permutation(m, n, k).mapping, f"(m={m}, q={q})"


def test_strong_markov_golden_mean():
    zz = build(2, F(1, 2))
    s = strong_markov(zz)
    assert s.matrix == ((1, 0, 2), (1, 1, 1), (1, 1, 0))
    assert s.char_poly() == zz.digit_poly
    assert s.dim == zz.digit_poly.degree == zz.postcritical_count() - 1


def test_weak_markov_golden_mean():
    zz = build(2, F(1, 2))
    w = weak_markov(zz)
    assert w.columns() == [[1, 1, 1, 1], [0, 1, 1, 1],
                           [1, 0, 0, 0], [1, 1, 0, 0]]
    assert w.trace() == 2
    assert w.char_poly() == zz.digit_poly.shift_up(1)
    assert w.dim == s_dim_plus(zz)


def s_dim_plus(zz):
    return strong_markov(zz).dim + zz.m - 1


def test_signed_markov_golden_mean():
    zz = build(2, F(1, 2))
    sg = signed_markov(zz)
    assert sg.matrix == ((1, 0, 2), (-1, 1, -1), (1, -1, 0))
    assert sg.char_poly() == zz.digit_poly
    s = strong_markov(zz)
    for i in range(3):
        for j in range(3):
            assert abs(sg.matrix[i][j]) <= s.matrix[i][j]
            assert (sg.matrix[i][j] - s.matrix[i][j]) % 2 == 0


def test_markov_identities_sweep():
    for m in (2, 3, 4):
        for q in farey.iter_reduced(9):
            zz = build(m, q)
            d = zz.digit_poly
            assert strong_markov(zz).char_poly() == d
            assert weak_markov(zz).char_poly() == d.shift_up(m - 1)
            sp = signed_markov(zz).char_poly()
            assert sp in (d, d.compose_neg().monic_normalized()), \
                f"(m={m}, q={q})"


def test_orbit_closure_sweep():
    # build() raises ClosureError internally when the recurrence fails
    for m in (2, 3, 4, 5, 6):
        for q in farey.iter_reduced(12):
            zz = build(m, q)
            assert compare(zz.orbit[-1], zz.crit[0]) == 0


def test_count_fixed_golden_mean():
    zz = build(2, F(1, 2))
    assert count_fixed_numeric(zz, 1) == 2
    assert count_fixed_numeric(zz, 2) == 8
    w = weak_markov(zz)
    assert trace_powers([list(r) for r in w.matrix], 2) == [2, 8]


def test_count_fixed_matches_traces():
    for m, q, upto in ((2, F(1, 3), 5), (2, F(2, 5), 4), (3, F(1, 2), 4),
                       (3, F(2, 3), 4), (2, F(7, 12), 3)):
        zz = build(m, q)
        w = weak_markov(zz)
        expected = trace_powers([list(r) for r in w.matrix], upto)
        assert fixed_point_counts(zz, upto) == expected, f"(m={m}, q={q})"


def test_count_fixed_guard():
    zz = build(2, F(1, 2))
    with pytest.raises(ResourceGuardError):
        count_fixed_numeric(zz, 30, guard=100)


def test_markov_json():
    zz = build(2, F(1, 2))
    blob = json.dumps(strong_markov(zz).to_json_dict())
    data = json.loads(blob)
    assert data["kind"] == "strong"
    assert data["dim"] == 3
    assert data["convention"] == "columns-are-source"
    assert data["columns"] == [[1, 1, 1], [0, 1, 1], [2, 1, 0]]


def test_build_rejects_bad_input():
    with pytest.raises(farey.NotInteriorError):
        build(2, F(3, 2))
    with pytest.raises(ValueError):
        build(1, F(1, 2))


def test_partition_matches_postcritical_set():
    for m, q in ((2, F(2, 5)), (3, F(3, 7)), (4, F(1, 4))):
        zz = build(m, q)
        s = strong_markov(zz)
        assert len(s.partition) == zz.postcritical_count()
        w = weak_markov(zz)
        assert len(w.partition) == zz.postcritical_count() + zz.m - 1
