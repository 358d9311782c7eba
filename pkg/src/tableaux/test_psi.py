import pytest
from .TableauError import TableauError
from .psi import psi, psi_inv
from ..dyck.dyck import DyckPath, all_dyck_paths, halves
from ..patterns.patterns import enumerate_avoiders
from ..perm.permutation import Permutation, identity, parse_permutation

P321 = Permutation((3, 2, 1))


def test_psi():
    test_cases = [
        ("24135867", "ududuuuddudduudd", "Eight entries"),
        ("123", "uuuddd", "Identity"),
        ("21", "udud", "Transposition"),
        ("", "", "Empty"),
    ]
    for text, expected, test_name in test_cases:
        assert psi(parse_permutation(text)).steps == expected, f"Test failed: {test_name}"

    with pytest.raises(TableauError) as error:
        psi(parse_permutation("321"))
    assert "TableauError: 3 2 1 is not 321-avoiding" == str(error.value), "Test failed: three rows"


def test_psi_inv():
    assert psi_inv(DyckPath("ududuuuddudduudd")) == parse_permutation("24135867"), "Test failed: eight step path"
    for n in range(0, 6):
        assert psi_inv(DyckPath("u" * n + "d" * n)) == identity(n), f"Test failed: pyramid {n}"


def test_psi_is_a_bijection():
    for n in range(0, 8):
        images = [psi(sigma) for sigma in enumerate_avoiders(n, [P321])]
        assert len(set(images)) == len(images), f"Test failed: injectivity at n={n}"
        assert set(images) == set(all_dyck_paths(n)), f"Test failed: surjectivity at n={n}"
        for path in images:
            left, right = halves(path)
            assert left.count("d") == right.count("u"), f"Test failed: balanced halves of {path}"
    for n in range(0, 7):
        for path in all_dyck_paths(n):
            assert psi(psi_inv(path)) == path, f"Test failed: round trip of {path}"
