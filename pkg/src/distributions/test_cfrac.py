from .cfrac import catalan_levels, cfrac_series, crs_nes_levels, qp_catalan_levels
from .distribution import distribution


def test_catalan_levels():
    assert [c.pretty() for c in cfrac_series(catalan_levels(), 5)] == ["1", "1", "2", "5", "14", "42"], \
        "Test failed: Catalan numbers"
    assert cfrac_series(catalan_levels(), 0) == [1], "Test failed: N=0"


def test_level_coefficients():
    qp = qp_catalan_levels().level_coefficients
    assert [qp(m).pretty() for m in range(1, 8)] == ["1", "q", "p", "qp", "p²", "qp²", "p³"], "Test failed: qp"
    crs_nes = crs_nes_levels().level_coefficients
    assert [crs_nes(m).pretty() for m in range(1, 7)] == ["1", "1", "x+y", "x+y", "x²+xy+y²", "x²+xy+y²"], \
        "Test failed: crossings and nestings"


def test_crs_nes_series():
    series = cfrac_series(crs_nes_levels(), 8)
    assert series[3].pretty() == "4+x+y", "Test failed: z^3"
    for n in range(0, 9):
        assert series[n] == distribution(n, [], ["crs", "nes"]), f"Test failed: z^{n}"


def test_depth_is_enough():
    for levels in (catalan_levels(), qp_catalan_levels(), crs_nes_levels()):
        assert cfrac_series(levels, 6) == cfrac_series(levels, 6, depth=8), f"Test failed: {levels.name}"
