import random
from fractions import Fraction

import pytest

from recprs.classic import subres_matrix, tau_select
from recprs.errors import IndexOutOfRange, SingularU
from recprs.families import (
    chain_pair,
    knuth_pair,
    random_chain_pair,
    reference_gcd_chain,
    worked_example_pair,
)
from recprs.matrix import Mat, det
from recprs.nested import nested_subresultant
from recprs.prs import recursive_prs
from recprs.recursive import rec_dims
from recprs.reduced import (
    h_matrix,
    proportionality_check,
    reduced_dims,
    reduced_level,
    reduced_matrix,
    reduced_matrix_tau,
    reduced_subresultant,
    thm2_constants,
    verify_thm2,
)

REF_CHAIN = (6, 4, 2, 0)


@pytest.mark.parametrize("m, n, k, j, dims", [
    (6, 5, 1, 2, (9, 7)),
    (6, 5, 2, 2, (7, 5)),
    (6, 5, 2, 0, (9, 9)),
    (6, 5, 3, 0, (7, 7)),
    (5, 4, 3, 0, (5, 5)),
])
def test_reduced_dims_examples(m, n, k, j, dims):
    assert reduced_dims(m, n, k, j) == dims


def test_level_one_is_classical():
    f, g = knuth_pair()
    for j in range(6):
        assert reduced_matrix(f, g, (8,), 1, j) == subres_matrix(f, g, j)


def coefficients(f, g):
    a = {6 - i: c for i, c in enumerate(f.descending())}
    b = {5 - i: c for i, c in enumerate(g.descending())}
    b[-1] = 0
    return a, b


def test_worked_example_structure():
    f, g = worked_example_pair()
    a, b = coefficients(f, g)
    level = reduced_level(f, g, (6, 4, 0), 2)
    assert level.U == Mat.from_rows([[a[6], b[5]], [a[5], b[4]]])
    assert level.v == (0, b[5])
    mat = reduced_matrix(f, g, (6, 4, 0), 2, 2)
    assert mat.shape == (7, 5)
    assert mat.row(0) == [a[6], b[5], 0, 0, 0]
    assert mat.row(1) == [a[5], b[4], b[5], b[5], b[5]]
    assert reduced_matrix_tau(f, g, (6, 4, 0), 2, 2, 2).shape == (5, 5)


def test_worked_example_first_h_entry():
    # x U = -3 (a4, b3) solved by hand; h = 4 b4 + x . v
    f, g = worked_example_pair()
    a, b = coefficients(f, g)
    u = [[a[6], b[5]], [a[5], b[4]]]
    rhs = (-3 * a[4], -3 * b[3])
    d = Fraction(u[0][0] * u[1][1] - u[0][1] * u[1][0])
    x2 = (u[0][0] * rhs[1] - u[0][1] * rhs[0]) / d
    mat = reduced_matrix(f, g, (6, 4, 0), 2, 2)
    assert mat.row(2)[:3] == [a[4], b[3], b[4]]
    assert mat[2, 3] == 4 * b[4] + x2 * b[5]


def test_worked_example_factor_is_det_u_squared():
    f, g = worked_example_pair(random.Random(3))
    level = reduced_level(f, g, (6, 4, 0), 2)
    nested = nested_subresultant(f, g, (6, 4, 0), 2, 2)
    assert nested == reduced_subresultant(f, g, (6, 4, 0), 2, 2) * level.det_U ** 2


@pytest.mark.parametrize("chain, k, j, J, I", [
    ((6, 4), 2, 2, 3, 5),
    ((6, 4), 2, 0, 7, 7),
    ((6, 4, 2), 3, 0, 3, 3),
])
def test_thm2_constants_shape(chain, k, j, J, I):
    f, g = reference_gcd_chain()
    c = thm2_constants(f, g, chain, k, j)
    assert (c.J_kj, c.I_kj) == (J, I)


def test_thm2_constants_values():
    f, g = reference_gcd_chain()
    d2 = reduced_level(f, g, REF_CHAIN, 2).det_U
    c = thm2_constants(f, g, REF_CHAIN, 2, 0)
    assert c.B_hat_kj == d2 ** 6 and c.B_hat_prev == 1 and c.R_hat_prev == 1
    c = thm2_constants(f, g, REF_CHAIN, 3, 0)
    assert c.B_hat_prev == d2 ** 2
    assert c.predicted_factor == 1327104


def test_literal_b2_reading_fails_at_level_three():
    f, g = reference_gcd_chain()
    c = thm2_constants(f, g, REF_CHAIN, 3, 0)
    assert c.B_hat_prev != 1
    nested = nested_subresultant(f, g, REF_CHAIN, 3, 0)
    reduced = reduced_subresultant(f, g, REF_CHAIN, 3, 0)
    assert nested == reduced * c.predicted_factor
    literal = c.R_hat_prev ** c.J_kj * c.B_hat_kj
    assert nested != reduced * literal


def test_sylvester_identity_on_h():
    cases = [(*worked_example_pair(), (6, 4, 0), 2, 2)]
    cases += [(*reference_gcd_chain(), REF_CHAIN, k, j) for k, j in [(2, 2), (2, 1), (2, 0), (3, 0)]]
    for f, g, chain, k, j in cases:
        level = reduced_level(f, g, chain, k)
        h = h_matrix(f, g, chain, k, j)
        big_j = 2 * level.jp - 2 * j - 1
        for tau in range(j + 1):
            lhs = det(tau_select(h, j, tau))
            rhs = level.det_U ** (big_j - 1) * det(reduced_matrix_tau(f, g, chain, k, j, tau))
            assert lhs == rhs


def test_a_coefficients_match_previous_level():
    f, g = reference_gcd_chain()
    level = reduced_level(f, g, REF_CHAIN, 2)
    prev = reduced_subresultant(f, g, REF_CHAIN, 1, 4)
    assert list(level.A_coeffs) == [prev.coeff(i) for i in range(5)]


def test_size_stays_within_m_plus_n():
    rng = random.Random(31)
    for _ in range(30):
        f, g = random_chain_pair(rng, max_deg=8)
        chain = recursive_prs(f, g).degree_chain
        m, n = f.degree, g.degree
        for k in range(2, len(chain)):
            for j in range(chain[k - 1] - 1):
                rows, cols = reduced_dims(m, n, k, j)
                assert cols <= m + n
                assert cols <= rec_dims(m, n, chain, k, j)[1]


def test_singular_u_is_reported():
    f, g = chain_pair()
    with pytest.raises(SingularU):
        reduced_matrix(f, g, (5, 4, 2, 0), 3, 0)
    rep = verify_thm2(f, g, 3, 0)
    assert rep.status == "skipped" and rep.reason == "SINGULAR_U"


def test_level_data_needs_k_two():
    f, g = reference_gcd_chain()
    with pytest.raises(IndexOutOfRange):
        reduced_level(f, g, REF_CHAIN, 1)


def test_thm2_on_reference_family():
    f, g = reference_gcd_chain()
    for k, js in [(1, range(5)), (2, range(3)), (3, range(1))]:
        for j in js:
            rep = verify_thm2(f, g, k, j)
            assert rep.passed, rep.to_json(True)


def test_proportionality_knuth_pair():
    reps = proportionality_check(*knuth_pair())
    assert [(r.k, r.j, r.status) for r in reps] == [
        (1, 4, "pass"), (1, 2, "pass"), (1, 1, "pass"), (1, 0, "pass")]
    assert reps[0].factor == Fraction(5, 3)


def test_proportionality_reference_family():
    reps = proportionality_check(*reference_gcd_chain())
    assert all(r.passed for r in reps)
    assert [(r.k, r.j) for r in reps] == [(1, 4), (2, 2), (3, 0)]


def test_thm2_random():
    rng = random.Random(77)
    passed = 0
    for _ in range(25):
        f, g = random_chain_pair(rng, max_deg=7)
        chain = recursive_prs(f, g).degree_chain
        for k in range(2, len(chain)):
            for j in range(chain[k - 1] - 1):
                rep = verify_thm2(f, g, k, j)
                assert rep.status != "fail", rep.to_json(True)
                if rep.status == "skipped":
                    assert rep.reason == "SINGULAR_U"
                passed += rep.passed
    assert passed > 10
