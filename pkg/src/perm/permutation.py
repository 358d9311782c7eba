from typing import Iterable, Iterator, Sequence

from .PermutationError import PermutationError
from ..parsing.lexer import Lexer
from ..parsing.parser import Parser


class Permutation:
    """
    A permutation of {1..n} in one-line notation.

    Positions and values are 1-based: ``sigma(i)`` is the entry at position i.
    Instances are immutable and ordered lexicographically by their entries.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]) -> None:
        """
        Args:
            values (Iterable[int]): The entries sigma(1), ..., sigma(n).

        Raises:
            PermutationError: If the entries are not exactly 1..n.
        """
        entries = tuple(values)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise PermutationError(
                f"{' '.join(map(str, entries))!r} is not a permutation of 1..{len(entries)}")
        object.__setattr__(self, "values", entries)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Permutation is immutable")

    def __reduce__(self):
        return (Permutation, (self.values,))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise PermutationError(f"position {i} outside 1..{len(self.values)}")
        return self.values[i - 1]

    def position_of(self, value: int) -> int:
        """Return sigma^{-1}(value)."""
        return self.values.index(value) + 1

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __eq__(self, value: object, /) -> bool:
        return isinstance(value, Permutation) and self.values == value.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __lt__(self, other: "Permutation") -> bool:
        return self.values < other.values

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __str__(self) -> str:
        return " ".join(map(str, self.values))


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def reduce(word: Sequence[int]) -> Permutation:
    """
    Replace every entry of a word of distinct integers by its rank.

    Args:
        word (Sequence[int]): Pairwise distinct integers.

    Returns:
        Permutation: The reduction red(word), e.g. 4 3 7 9 5 -> 2 1 4 5 3.

    Raises:
        PermutationError: If the word has repeated entries.
    """
    if len(set(word)) != len(word):
        raise PermutationError(
            f"cannot reduce {' '.join(map(str, word))!r}: duplicate entries")
    rank = {value: r for r, value in enumerate(sorted(word), start=1)}
    return Permutation(rank[value] for value in word)


def delete_at(sigma: Permutation, a: int) -> Permutation:
    """Remove position a and reduce what is left."""
    if not 1 <= a <= len(sigma):
        raise PermutationError(f"position {a} outside 1..{len(sigma)}")
    return reduce(sigma.values[:a - 1] + sigma.values[a:])


def parse_permutation(text: str) -> Permutation:
    """
    Parse the permutation text format ("4 1 6 2", "4,1,6,2" or "4162").
    """
    return Permutation(Parser(Lexer(text).tokens).parse_entries())


def parse_patterns(text: str) -> list[Permutation]:
    """
    Parse a comma separated list of compact patterns ("123,132").
    """
    return [Permutation(entries) for entries in Parser(Lexer(text).tokens).parse_compact_list()]
