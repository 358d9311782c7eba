import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Mapping, Sequence

from .UnknownStatisticError import UnknownStatisticError
from .multipoly import MultiPoly
from ..patterns.patterns import enumerate_avoiders
from ..perm.permutation import Permutation
from ..perm.statistics import crs, exc, fp, inv, maj, nes

_logger = logging.getLogger(__name__)

STATISTICS: dict[str, Callable[[Permutation], int]] = {
    "fp": fp,
    "exc": exc,
    "crs": crs,
    "nes": nes,
    "inv": inv,
    "maj": maj,
}

_FALLBACK_VARS = ("x", "y", "q", "p", "z", "t", "s", "u", "v", "w")


def resolve_statistics(names: Iterable[str]) -> list[str]:
    """
    Check statistic names against the registry.

    Raises:
        UnknownStatisticError: On the first name that is not registered.
    """
    resolved = []
    for name in names:
        if name not in STATISTICS:
            raise UnknownStatisticError(name)
        resolved.append(name)
    return resolved


def default_variables(stats: Sequence[str]) -> dict[str, str]:
    """
    Pick a variable for every statistic.

    A lone statistic gets x. Otherwise fp and crs take x, nes takes y and
    exc, inv, maj take q; crs moves to p next to exc when nes is absent.
    A name already taken falls through to the next free one in
    x, y, q, p, z, t, s, u, v, w.
    """
    if len(stats) == 1:
        return {stats[0]: "x"}
    preferred = {"fp": "x", "crs": "x", "nes": "y", "exc": "q", "inv": "q", "maj": "q"}
    if "exc" in stats and "nes" not in stats:
        preferred["crs"] = "p"
    mapping: dict[str, str] = {}
    taken: set[str] = set()
    for stat in stats:
        name = preferred[stat]
        if name in taken:
            name = next(v for v in _FALLBACK_VARS if v not in taken)
        mapping[stat] = name
        taken.add(name)
    return mapping


def _count_shard(n: int, patterns: tuple[Permutation, ...], stats: tuple[str, ...],
                 prefix: tuple[int, ...]) -> Counter:
    counts: Counter = Counter()
    functions = [STATISTICS[name] for name in stats]
    for sigma in enumerate_avoiders(n, patterns, prefix):
        counts[tuple(f(sigma) for f in functions)] += 1
    return counts


def distribution(n: int, patterns: Iterable[Permutation], stats: Sequence[str],
                 variables: Mapping[str, str] | None = None, jobs: int = 1) -> MultiPoly:
    """
    The joint distribution of stats over S_n(patterns).

    Args:
        n (int): Length of the permutations.
        patterns (Iterable[Permutation]): The avoided set; empty means all of S_n.
        stats (Sequence[str]): Statistic names, each from STATISTICS.
        variables (Mapping[str, str] | None): stat -> variable name; defaults
            to default_variables(stats).
        jobs (int): Worker processes. With jobs > 1 the enumeration is split
            by first entry and the partial counts are summed.

    Returns:
        MultiPoly: sum over sigma of prod var(st)^{st(sigma)}.

    Raises:
        UnknownStatisticError: If a name is not registered.
    """
    stats = tuple(resolve_statistics(stats))
    patterns = tuple(patterns)
    mapping = dict(variables) if variables is not None else default_variables(stats)
    missing = [stat for stat in stats if stat not in mapping]
    if missing:
        mapping.update({stat: v for stat, v in default_variables(stats).items() if stat in missing})

    if jobs > 1 and n > 1:
        prefixes = [(first,) for first in range(1, n + 1)]
        _logger.info("distribution n=%d over %d shards with %d jobs", n, len(prefixes), jobs)
        counts: Counter = Counter()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_count_shard, n, patterns, stats, prefix) for prefix in prefixes]
            for future in futures:
                counts.update(future.result())
    else:
        counts = _count_shard(n, patterns, stats, ())

    # statistics sharing a variable multiply into one exponent
    names = sorted(set(mapping[stat] for stat in stats))
    terms: Counter = Counter()
    for values, count in counts.items():
        exponents = [0] * len(names)
        for stat, value in zip(stats, values):
            exponents[names.index(mapping[stat])] += value
        terms[tuple(exponents)] += count
    _logger.debug("distribution n=%d stats=%s: %d terms", n, ",".join(stats), len(terms))
    return MultiPoly(names, dict(terms))
