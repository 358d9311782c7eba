import logging
from dataclasses import dataclass

from .BijectionError import BijectionError
from .theta import PATTERN_132, PATTERN_321, require_avoiding
from ..patterns.patterns import smallest_occurrence
from ..perm.permutation import Permutation
from ..perm.statistics import inv

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GammaTrace:
    """sigma, M sigma, M^2 sigma, ... up to the first 132-avoiding word."""
    steps: tuple[Permutation, ...]

    @property
    def image(self) -> Permutation:
        return self.steps[-1]


def m_step(sigma: Permutation) -> Permutation:
    """
    Rewrite the smallest 132 occurrence of sigma into a 321 occurrence.

    The three values are put back on the same positions in decreasing order;
    a 132-avoiding sigma is returned unchanged.
    """
    occurrence = smallest_occurrence(sigma, PATTERN_132)
    if occurrence is None:
        return sigma
    values = list(sigma.values)
    for position, value in zip(occurrence.positions, sorted(occurrence.values(sigma), reverse=True)):
        values[position - 1] = value
    return Permutation(values)


def gamma_trace(sigma: Permutation) -> GammaTrace:
    """
    Apply m_step until no 132 remains.

    Raises:
        BijectionError: If sigma contains 321, or if a step fails to raise
            the inversion count.
    """
    require_avoiding(sigma, PATTERN_321)
    steps = [sigma]
    while True:
        current = steps[-1]
        following = m_step(current)
        if following == current:
            break
        if inv(following) <= inv(current):
            raise BijectionError(f"rewriting {current} did not increase inv")
        steps.append(following)
    _logger.debug("gamma(%s) took %d rewrites", sigma, len(steps) - 1)
    return GammaTrace(tuple(steps))


def gamma(sigma: Permutation) -> Permutation:
    return gamma_trace(sigma).image
