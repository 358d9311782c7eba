import pytest
from .BijectionError import BijectionError
from .gamma import gamma, gamma_trace, m_step
from .theta import theta
from ..patterns.patterns import avoids, enumerate_avoiders
from ..perm.operators import rci
from ..perm.permutation import Permutation, identity, parse_permutation
from ..perm.statistics import crs, exc, fp, inv

P321 = Permutation((3, 2, 1))
P132 = Permutation((1, 3, 2))


def test_m_step():
    # (permutation, expected rewrite, test name)
    test_cases = [
        ("4162735", "6152734", "First rewrite"),
        ("6152734", "6521734", "Second rewrite"),
        ("6521734", "6571324", "Third rewrite"),
        ("6571324", "6573214", "Fourth rewrite"),
        ("6573214", "6573214", "Already 132-avoiding"),
        ("132", "321", "Pattern itself"),
    ]
    for text, expected, test_name in test_cases:
        assert m_step(parse_permutation(text)) == parse_permutation(expected), f"Test failed: {test_name}"


def test_gamma():
    trace = gamma_trace(parse_permutation("4162735"))
    assert [str(step).replace(" ", "") for step in trace.steps] == [
        "4162735", "6152734", "6521734", "6571324", "6573214"], "Test failed: rewrite chain"
    assert gamma(parse_permutation("4162735")) == parse_permutation("6573214"), "Test failed: image"
    assert gamma(identity(5)) == identity(5), "Test failed: identity"
    assert gamma_trace(identity(0)).steps == (identity(0),), "Test failed: empty permutation"

    with pytest.raises(BijectionError) as error:
        gamma(parse_permutation("321"))
    assert "BijectionError: 3 2 1 is not 321-avoiding" == str(error.value), "Test failed: 321 input"


def test_gamma_is_theta_after_rci():
    for n in range(0, 9):
        for sigma in enumerate_avoiders(n, [P321]):
            trace = gamma_trace(sigma)
            image = trace.image
            assert image == theta(rci(sigma)), f"Test failed: gamma of {sigma}"
            assert avoids(image, P132), f"Test failed: image of {sigma} avoids 132"
            assert (fp(image), exc(image), crs(image)) == (fp(sigma), exc(sigma), crs(sigma)), \
                f"Test failed: (fp, exc, crs) of {sigma}"
            assert all(inv(a) < inv(b) for a, b in zip(trace.steps, trace.steps[1:])), \
                f"Test failed: inv grows along {sigma}"
