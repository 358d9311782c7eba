from .matching import matching
from .rsk import rsk
from ..patterns.patterns import enumerate_avoiders
from ..perm.permutation import Permutation, identity, parse_permutation

P321 = Permutation((3, 2, 1))


def test_matching():
    # (permutation, expected pairs, test name)
    test_cases = [
        ("24135867", ((2, 3), (4, 4), (8, 7)), "Eight entries"),
        ("415263", ((4, 2), (5, 4), (6, 6)), "Alternating"),
        ("12345", (), "Identity"),
        ("21", ((2, 2),), "Transposition"),
    ]
    for text, expected, test_name in test_cases:
        assert matching(parse_permutation(text)).pairs == expected, f"Test failed: {test_name}"
    assert len(matching(identity(0))) == 0, "Test failed: empty permutation"


def test_matching_gives_second_rows():
    for n in range(0, 9):
        for sigma in enumerate_avoiders(n, [P321]):
            found = matching(sigma)
            rows = rsk(sigma)
            second_p = rows.p.rows[1] if len(rows.p.rows) > 1 else ()
            second_q = rows.q.rows[1] if len(rows.q.rows) > 1 else ()
            assert found.excedance_values == second_p, f"Test failed: P second row of {sigma}"
            assert found.positions == second_q, f"Test failed: Q second row of {sigma}"


def test_321_avoiders_are_bi_increasing():
    for n in range(0, 9):
        for sigma in enumerate_avoiders(n, [P321]):
            excedance_values = [sigma(i) for i in range(1, n + 1) if sigma(i) > i]
            other_values = [sigma(i) for i in range(1, n + 1) if sigma(i) <= i]
            assert excedance_values == sorted(excedance_values), f"Test failed: excedances of {sigma}"
            assert other_values == sorted(other_values), f"Test failed: non-excedances of {sigma}"


def test_matching_is_monotone():
    for n in range(0, 8):
        for sigma in enumerate_avoiders(n, [P321]):
            found = matching(sigma)
            assert list(found.excedance_values) == sorted(set(found.excedance_values)), \
                f"Test failed: values of {sigma}"
            assert list(found.positions) == sorted(set(found.positions)), f"Test failed: positions of {sigma}"


def test_matching_outside_321_avoiders():
    found = matching(parse_permutation("4312"))
    assert found.excedance_values == (4, 3), "Test failed: values keep emission order"
