from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from ..perm.permutation import Permutation
from ..perm.statistics import crs, nes


@dataclass(frozen=True)
class Occurrence:
    """Ascending 1-based positions of a pattern occurrence in its host."""
    positions: tuple[int, ...]

    def values(self, sigma: Permutation) -> tuple[int, ...]:
        return tuple(sigma(p) for p in self.positions)


@dataclass(frozen=True)
class AvoidanceClass:
    n: int
    patterns: frozenset[Permutation]
    members: tuple[Permutation, ...]


def _iter_occurrences(word: Sequence[int], pattern: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # Backtracking over positions; a partial choice is kept only while its
    # values are order-isomorphic to the matching prefix of the pattern, so the
    # tuples come out in ascending lexicographic order.
    k = len(pattern)
    n = len(word)
    chosen: list[int] = []

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        depth = len(chosen)
        if depth == k:
            yield tuple(p + 1 for p in chosen)
            return
        for pos in range(start, n - (k - depth) + 1):
            value = word[pos]
            if all((value > word[chosen[e]]) == (pattern[depth] > pattern[e]) for e in range(depth)):
                chosen.append(pos)
                yield from extend(pos + 1)
                chosen.pop()

    yield from extend(0)


def occurrences(sigma: Permutation, tau: Permutation) -> list[Occurrence]:
    """
    List every occurrence of tau in sigma.

    Args:
        sigma (Permutation): The host permutation.
        tau (Permutation): The pattern.

    Returns:
        list[Occurrence]: All occurrences in ascending lexicographic order of
        their position tuples; empty iff sigma avoids tau.
    """
    return [Occurrence(positions) for positions in _iter_occurrences(sigma.values, tau.values)]


def smallest_occurrence(sigma: Permutation, tau: Permutation) -> Occurrence | None:
    """The lexicographically smallest occurrence of tau in sigma, or None."""
    first = next(_iter_occurrences(sigma.values, tau.values), None)
    return None if first is None else Occurrence(first)


def avoids(sigma: Permutation, tau: Permutation) -> bool:
    return next(_iter_occurrences(sigma.values, tau.values), None) is None


def avoids_all(sigma: Permutation, patterns: Iterable[Permutation]) -> bool:
    return all(avoids(sigma, tau) for tau in patterns)


def _ends_with_occurrence(word: Sequence[int], pattern: Sequence[int]) -> bool:
    # Only occurrences using the last entry are new when a prefix grows by one.
    if len(pattern) > len(word):
        return False
    last = word[-1]
    head = pattern[:-1]
    for positions in _iter_occurrences(word[:-1], head):
        if all((last > word[p - 1]) == (pattern[-1] > head[e]) for e, p in enumerate(positions)):
            return True
    return False


def enumerate_avoiders(n: int, patterns: Iterable[Permutation] = (),
                       prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """
    Generate S_n(T) in lexicographic order.

    Prefixes are grown one entry at a time and a prefix containing an
    occurrence of some pattern is never extended. A fixed starting prefix
    selects one shard of the enumeration (for example all members starting
    with a given entry); shards taken over every first entry concatenate to
    the full stream.

    Args:
        n (int): Length of the permutations, n >= 0.
        patterns (Iterable[Permutation]): The set T; empty means all of S_n.
        prefix (Sequence[int]): Entries every generated member must start with.

    Yields:
        Permutation: The members of S_n(T) extending prefix.
    """
    pattern_words = [tau.values for tau in patterns]
    prefix = list(prefix)
    if any(len(tau) == 0 for tau in pattern_words):
        # the empty pattern occurs in everything
        return
    if len(set(prefix)) != len(prefix) or any(not 1 <= v <= n for v in prefix):
        return
    for length in range(1, len(prefix) + 1):
        if any(_ends_with_occurrence(prefix[:length], tau) for tau in pattern_words):
            return

    remaining = sorted(set(range(1, n + 1)) - set(prefix))
    if not pattern_words:
        for tail in permutations(remaining):
            yield Permutation(prefix + list(tail))
        return

    def grow(word: list[int], left: list[int]) -> Iterator[Permutation]:
        if not left:
            yield Permutation(word)
            return
        for index, value in enumerate(left):
            word.append(value)
            if not any(_ends_with_occurrence(word, tau) for tau in pattern_words):
                yield from grow(word, left[:index] + left[index + 1:])
            word.pop()

    yield from grow(prefix, remaining)


def avoidance_class(n: int, patterns: Iterable[Permutation]) -> AvoidanceClass:
    patterns = frozenset(patterns)
    return AvoidanceClass(n, patterns, tuple(enumerate_avoiders(n, patterns)))


def is_nonnesting(sigma: Permutation) -> bool:
    return nes(sigma) == 0


def is_noncrossing(sigma: Permutation) -> bool:
    return crs(sigma) == 0
