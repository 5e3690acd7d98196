import random

import pytest

from recprs.classic import subresultant_poly
from recprs.errors import IndexOutOfRange
from recprs.families import (
    chain_pair,
    knuth_pair,
    random_chain_pair,
    reference_gcd_chain,
    worked_example_pair,
)
from recprs.matrix import Mat, det, det_cofactor
from recprs.nested import (
    in_theorem_range,
    nested_matrix,
    nested_subresultant,
    thm1_constants,
    verify_thm1,
)
from recprs.poly import Poly, proportionality_factor
from recprs.prs import recursive_prs


def a_coeffs_by_hand(f, g):
    """A_j = |a6 b5 0; a5 b4 b5; a_j b_{j-1} b_j| for an m=6, n=5 pair."""
    a = {6 - i: c for i, c in enumerate(f.descending())}
    b = {5 - i: c for i, c in enumerate(g.descending())}
    b[-1] = 0
    return {j: det_cofactor(Mat.from_rows([[a[6], b[5], 0], [a[5], b[4], b[5]],
                                          [a[j], b[j - 1], b[j]]]))
            for j in range(5)}


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_worked_example_entry_pattern(seed):
    f, g = worked_example_pair(random.Random(seed))
    A = a_coeffs_by_hand(f, g)
    mat = nested_matrix(f, g, (6, 4, 0), 2, 2)
    expected = [
        [A[4], 4 * A[4], 0],
        [A[3], 3 * A[3], 4 * A[4]],
        [A[2], 2 * A[2], 3 * A[3]],
        [A[1], A[1], 2 * A[2]],
        [A[0], 0, A[1]],
    ]
    assert mat.to_rows() == expected
    s = Poly([A[i] for i in range(5)], nominal_degree=4)
    ds = Poly([i * A[i] for i in range(1, 5)], nominal_degree=3)
    assert nested_subresultant(f, g, (6, 4, 0), 2, 2) == subresultant_poly(s, ds, 2)


def test_level_one_is_classical():
    f, g = knuth_pair()
    for j in range(6):
        assert nested_subresultant(f, g, (8,), 1, j) == subresultant_poly(f, g, j)


def test_dimensions():
    f, g = chain_pair()
    assert nested_matrix(f, g, (5, 4, 2, 0), 2, 0).shape == (7, 7)
    assert nested_matrix(f, g, (5, 4, 2, 0), 3, 0).shape == (3, 3)
    assert nested_matrix(f, g, (5, 4, 2, 0), 2, 3).shape == (4, 1)


def test_gcd_stage_is_detected():
    # stage 2 of the chain pair has a nontrivial gcd, so j=0 vanishes
    f, g = chain_pair()
    assert det(nested_matrix(f, g, (5, 4, 2, 0), 2, 0)) == 0
    assert nested_subresultant(f, g, (5, 4, 2, 0), 2, 0).is_zero()


def test_proportional_to_second_stage():
    f, g = reference_gcd_chain()
    r = recursive_prs(f, g)
    s = nested_subresultant(f, g, r.degree_chain, 2, 2)
    assert proportionality_factor(s, r.stages[1].polys[-1]) is not None


@pytest.mark.parametrize("m, n, chain, k, j, u, b, r", [
    (6, 5, (6, 4), 2, 2, 9, 3, 1),     # u_{k-1} = 3, b = 3: exponent 2 * 3
    (7, 5, (7, 4), 2, 2, 12, 3, -1),   # u_{k-1} = 4: exponent 3 * 3
    (6, 5, (6, 4), 2, 3, 3, 1, 1),     # b = 1 never flips the sign
    (6, 5, (6, 4), 2, 0, 21, 7, 1),
])
def test_thm1_constants_examples(m, n, chain, k, j, u, b, r):
    c = thm1_constants(m, n, chain, k, j)
    assert (c.u_kj, c.b_kj, c.r_kj, c.R_prev) == (u, b, r, 1)


def test_thm1_constants_level_three():
    # R_2 = R_1**b_2 * r_2 with b_2 = 3 and u_1 = 3
    c = thm1_constants(6, 5, (6, 4, 2), 3, 0)
    assert c.R_prev == 1 and c.b_kj == 3
    c = thm1_constants(7, 5, (7, 4, 2), 3, 0)
    assert c.R_prev == -1 and c.predicted_factor == (-1) ** 3 * c.r_kj


def test_theorem_range():
    assert in_theorem_range((6, 4), 2, 2, 5)
    assert not in_theorem_range((6, 4), 2, 3, 5)
    assert in_theorem_range((6,), 1, 4, 5)
    assert not in_theorem_range((6,), 1, 5, 5)


@pytest.mark.parametrize("family", [reference_gcd_chain, chain_pair])
def test_thm1_on_families(family):
    f, g = family()
    chain = recursive_prs(f, g).degree_chain
    for k in range(1, len(chain)):
        top = g.degree if k == 1 else chain[k - 1] - 1
        for j in range(top):
            rep = verify_thm1(f, g, k, j)
            assert rep.status in ("pass", "skipped"), rep.to_json(True)
            if rep.status == "skipped":
                assert rep.reason == "VANISHING_LEADING" or k == 3


def test_thm1_reference_depth_three():
    f, g = reference_gcd_chain()
    rep = verify_thm1(f, g, 3, 0)
    assert rep.passed and rep.witness.is_zero()


def test_thm1_out_of_range_is_skipped():
    f, g = reference_gcd_chain()
    rep = verify_thm1(f, g, 2, 3)
    assert rep.status == "skipped" and rep.reason == IndexOutOfRange.code


def test_thm1_random_level_two():
    rng = random.Random(21)
    passed = 0
    for _ in range(25):
        f, g = random_chain_pair(rng, max_deg=7)
        chain = recursive_prs(f, g).degree_chain
        if len(chain) < 3:
            continue
        for j in range(chain[1] - 1):
            rep = verify_thm1(f, g, 2, j)
            assert rep.status != "fail", rep.to_json(True)
            passed += rep.passed
    assert passed > 10
