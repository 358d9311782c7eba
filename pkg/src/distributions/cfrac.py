from dataclasses import dataclass
from typing import Callable

from .multipoly import MultiPoly


@dataclass(frozen=True)
class CFracLevels:
    """
    The continued fraction 1/(1 - c_1 z/(1 - c_2 z/(1 - ...))).

    level_coefficients(m) returns c_m for m >= 1.
    """
    name: str
    level_coefficients: Callable[[int], MultiPoly]


def _one(m: int) -> MultiPoly:
    return MultiPoly.constant(1)


def _qp_level(m: int) -> MultiPoly:
    if m == 1:
        return MultiPoly.constant(1)
    if m % 2 == 0:
        return MultiPoly(("q", "p"), {(1, m // 2 - 1): 1})
    return MultiPoly(("p",), {(m // 2,): 1})


def _crs_nes_level(m: int) -> MultiPoly:
    # levels 2r-1 and 2r both carry x^{r-1} + x^{r-2} y + ... + y^{r-1}
    r = (m + 1) // 2
    return MultiPoly(("x", "y"), {(i, r - 1 - i): 1 for i in range(r)})


def catalan_levels() -> CFracLevels:
    return CFracLevels("catalan", _one)


def qp_catalan_levels() -> CFracLevels:
    """Levels 1, q, p, qp, p^2, qp^2, ...: the (exc, crs) generating function of 321-avoiders."""
    return CFracLevels("qp-catalan", _qp_level)


def crs_nes_levels() -> CFracLevels:
    """Levels 1, 1, x+y, x+y, x^2+xy+y^2, ...: the (crs, nes) generating function of S_n."""
    return CFracLevels("crs-nes", _crs_nes_level)


def cfrac_series(levels: CFracLevels, N: int, depth: int | None = None) -> list[MultiPoly]:
    """
    Coefficients of z^0..z^N of the continued fraction cut at depth levels.

    Level m only affects z^m and beyond, so the default depth N + 1 is exact
    through z^N. The fraction is folded from the bottom: F = 1, then for
    m = depth..1, F = 1/(1 - c_m z F) as a truncated series.

    Args:
        levels (CFracLevels): The level coefficients.
        N (int): Highest power of z returned, N >= 0.
        depth (int | None): Number of levels kept; defaults to N + 1.

    Returns:
        list[MultiPoly]: N + 1 coefficients.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    depth = N + 1 if depth is None else depth
    zero = MultiPoly.constant(0)
    series = [MultiPoly.constant(1)] + [zero] * N
    for m in range(depth, 0, -1):
        coefficient = levels.level_coefficients(m)
        shifted = [zero] + [coefficient * term for term in series[:-1]]
        reciprocal = [MultiPoly.constant(1)]
        for t in range(1, N + 1):
            total = zero
            for s in range(1, t + 1):
                if not shifted[s].is_zero():
                    total = total + shifted[s] * reciprocal[t - s]
            reciprocal.append(total)
        series = reciprocal
    return series
