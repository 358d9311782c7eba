from .catalan import catalan_by_enumeration, catalan_number, catalan_qp, inv_dist_check, q_inversion_poly
from .cfrac import cfrac_series, qp_catalan_levels
from .distribution import distribution
from ..perm.permutation import Permutation, parse_permutation


def test_catalan_qp():
    # (n, expected polynomial, test name)
    test_cases = [
        (0, "1", "Empty"),
        (1, "1", "One"),
        (2, "1+q", "Two"),
        (3, "1+2q+q²+qp", "Three"),
    ]
    for n, expected, test_name in test_cases:
        assert catalan_qp(n).poly.pretty() == expected, f"Test failed: {test_name}"
    assert catalan_qp(3).poly.coefficient_of({"q": 1, "p": 1}) == 1, "Test failed: coefficient of qp"


def test_catalan_qp_specializes():
    for n in range(0, 12):
        assert catalan_qp(n).poly.evaluate({"q": 1, "p": 1}) == catalan_number(n), f"Test failed: C_{n}(1, 1)"


def test_catalan_qp_counts_avoiders():
    for pattern in ("321", "132", "213"):
        for n in range(0, 9):
            assert catalan_by_enumeration(n, parse_permutation(pattern)) == catalan_qp(n).poly, \
                f"Test failed: S_{n}({pattern})"


def test_fixed_points_excedances_crossings_agree():
    for n in range(0, 8):
        polys = [distribution(n, [parse_permutation(tau)], ["fp", "exc", "crs"]) for tau in ("213", "132", "321")]
        assert polys[0] == polys[1] == polys[2], f"Test failed: n={n}"


def test_cfrac_matches_recurrence():
    series = cfrac_series(qp_catalan_levels(), 10)
    for n in range(0, 11):
        assert series[n] == catalan_qp(n).poly, f"Test failed: z^{n}"


def test_inversions():
    assert q_inversion_poly(3).pretty() == "1+2q+2q²", "Test failed: I_3"
    for n in range(0, 9):
        check = inv_dist_check(n)
        assert check.equal, f"Test failed: I_{n}"
    assert inv_dist_check(0).i_n == 1, "Test failed: I_0"


def test_nonnesting_catalan():
    p321 = Permutation((3, 2, 1))
    for n in range(0, 8):
        assert distribution(n, [p321], ["nes"]) == catalan_number(n), f"Test failed: no nestings in S_{n}(321)"
