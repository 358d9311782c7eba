import pytest
from .DyckError import DyckError
from .dyck import DyckPath, all_dyck_paths, halves, odot, tunnel_counts, tunnels
from .phi import phi, phi_inv
from ..patterns.patterns import avoids, enumerate_avoiders
from ..perm.decomposition import direct_product, t_set
from ..perm.permutation import Permutation, identity
from ..perm.statistics import exc, fp

P132 = Permutation((1, 3, 2))


def test_phi_inv():
    # (path, expected permutation, test name)
    test_cases = [
        ("ududuuuddudduudd", (7, 8, 5, 3, 4, 6, 2, 1), "Eight step path"),
        ("udud", (2, 1), "Two peaks"),
        ("uuuddd", (1, 2, 3), "Pyramid"),
        ("", (), "Empty path"),
    ]
    for steps, expected, test_name in test_cases:
        assert phi_inv(DyckPath(steps)).values == expected, f"Test failed: {test_name}"


def test_phi():
    test_cases = [
        (Permutation((7, 8, 5, 3, 4, 6, 2, 1)), "ududuuuddudduudd", "Eight step path"),
        (identity(3), "uuuddd", "Identity"),
        (Permutation((2, 1)), "udud", "Two peaks"),
    ]
    for sigma, expected, test_name in test_cases:
        assert phi(sigma).steps == expected, f"Test failed: {test_name}"

    with pytest.raises(DyckError) as error:
        phi(Permutation((1, 3, 2)))
    assert "DyckError: 1 3 2 is not 132-avoiding" == str(error.value), "Test failed: 132 input"


def test_phi_is_a_bijection():
    for n in range(0, 7):
        images = [phi_inv(path) for path in all_dyck_paths(n)]
        assert len(set(images)) == len(images), f"Test failed: injectivity at n={n}"
        assert set(images) == set(enumerate_avoiders(n, [P132])), f"Test failed: image is S_{n}(132)"
        for path in all_dyck_paths(n):
            assert phi(phi_inv(path)) == path, f"Test failed: round trip of {path}"


def test_phi_inv_structure():
    for n in range(1, 7):
        for path in all_dyck_paths(n):
            sigma = phi_inv(path)
            left, right = halves(path)
            j = right.count("u") + 1
            for t in range(1, j):
                assert sigma.position_of(t) >= j and sigma(t) >= j, f"Test failed: leading block of {path}"
            for i in range(j, n + 1):
                if sigma(i) > i:
                    assert sigma.position_of(i) < i, f"Test failed: excedance tail of {path}"
            assert len(t_set(sigma)) == right.count("u"), f"Test failed: T-set size of {path}"
            for tunnel in tunnels(path):
                label = n + 1 - tunnel.up_index
                assert sigma(label) == tunnel.down_index, f"Test failed: numbering of {path}"
                assert (tunnel.side != "right") == (label >= sigma(label)), f"Test failed: tunnel side in {path}"
            lt, ct, rt = tunnel_counts(path)
            assert (fp(sigma), exc(sigma)) == (ct, rt), f"Test failed: (fp, exc) = (ct, rt) on {path}"


def test_odot_maps_to_product():
    for n1 in range(1, 5):
        for n2 in range(1, 7 - n1):
            for first in all_dyck_paths(n1):
                for second in all_dyck_paths(n2):
                    expected = direct_product(phi_inv(second), phi_inv(first))
                    assert phi_inv(odot(first, second)) == expected, f"Test failed: {first} ⊙ {second}"
                    assert avoids(expected, P132), f"Test failed: product of {first}, {second} avoids 132"
