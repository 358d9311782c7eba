import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .distribution import default_variables, distribution, resolve_statistics
from .multipoly import MultiPoly
from ..perm.permutation import Permutation

_logger = logging.getLogger(__name__)

PatternSet = tuple[Permutation, ...]


def _label(pattern_set: PatternSet) -> str:
    return ",".join("".join(map(str, tau)) for tau in pattern_set)


@dataclass(frozen=True)
class WilfClass:
    members: tuple[PatternSet, ...]
    # witness[n - 1] is the shared polynomial for length n
    witness: tuple[MultiPoly, ...]

    @property
    def labels(self) -> list[str]:
        return [_label(member) for member in self.members]


@dataclass(frozen=True)
class WilfReport:
    stats: tuple[str, ...]
    n_max: int
    classes: tuple[WilfClass, ...]

    def partition(self) -> list[list[str]]:
        """The classes as lists of pattern labels such as "132"."""
        return [wilf_class.labels for wilf_class in self.classes]


def wilf_partition(pattern_sets: Iterable[PatternSet | Permutation], stats: Sequence[str], n_max: int,
                   jobs: int = 1) -> WilfReport:
    """
    Group pattern sets by their joint distribution of stats.

    Two sets share a class iff their polynomials agree for every n in
    1..n_max. Classes are ordered by their smallest member and members
    keep their sorted order.

    Args:
        pattern_sets (Iterable[PatternSet | Permutation]): Single patterns or
            tuples of patterns.
        stats (Sequence[str]): Statistic names.
        n_max (int): Largest length compared, at least 1.

    Returns:
        WilfReport: The partition with one witness polynomial list per class.
    """
    stats = tuple(resolve_statistics(stats))
    variables = default_variables(stats)
    normalized = sorted({(s,) if isinstance(s, Permutation) else tuple(sorted(s)) for s in pattern_sets})
    grouped: list[tuple[list[MultiPoly], list[PatternSet]]] = []
    for pattern_set in normalized:
        polys = [distribution(n, pattern_set, stats, variables, jobs) for n in range(1, n_max + 1)]
        for witness, members in grouped:
            if witness == polys:
                members.append(pattern_set)
                break
        else:
            grouped.append((polys, [pattern_set]))
        _logger.debug("wilf: %s done", _label(pattern_set))
    _logger.info("wilf over %d pattern sets, stats %s, n<=%d: %d classes",
                 len(normalized), ",".join(stats), n_max, len(grouped))
    return WilfReport(stats, n_max, tuple(WilfClass(tuple(members), tuple(witness))
                                          for witness, members in grouped))
