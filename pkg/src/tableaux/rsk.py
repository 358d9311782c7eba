from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable

from .TableauError import TableauError
from ..perm.permutation import Permutation


class Tableau:
    """
    A Young tableau stored row by row, first row on top.

    Rows increase left to right, columns increase top to bottom and the row
    lengths form a partition. Trailing empty rows are dropped.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        entries = [tuple(row) for row in rows]
        while entries and not entries[-1]:
            entries.pop()
        for r, row in enumerate(entries):
            if not row:
                raise TableauError(f"row {r + 1} is empty")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise TableauError(f"row {r + 1} is not increasing")
            if r > 0:
                above = entries[r - 1]
                if len(row) > len(above):
                    raise TableauError(f"row {r + 1} is longer than row {r}")
                if any(above[c] >= row[c] for c in range(len(row))):
                    raise TableauError(f"column order broken in row {r + 1}")
        object.__setattr__(self, "rows", tuple(entries))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Tableau is immutable")

    def __reduce__(self):
        return (Tableau, (self.rows,))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def row_of(self, value: int) -> int:
        """0-based index of the row holding value."""
        for r, row in enumerate(self.rows):
            if value in row:
                return r
        raise TableauError(f"{value} could not be found in tableau")

    def is_standard(self) -> bool:
        """True when the entries are exactly 1..n."""
        return sorted(v for row in self.rows for v in row) == list(range(1, self.n + 1))

    def to_rows(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __eq__(self, value: object, /) -> bool:
        return isinstance(value, Tableau) and self.rows == value.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({self.to_rows()})"

    def __str__(self) -> str:
        return "\n".join("|" + "|".join(map(str, row)) + "|" for row in self.rows)


@dataclass(frozen=True)
class TableauPair:
    """The insertion tableau p and the recording tableau q of identical shape."""
    p: Tableau
    q: Tableau

    def __post_init__(self) -> None:
        if self.p.shape != self.q.shape:
            raise TableauError(f"shapes differ: {self.p.shape} and {self.q.shape}")
        if not self.q.is_standard():
            raise TableauError("recording tableau is not standard")


def rsk(sigma: Permutation) -> TableauPair:
    """
    Robinson-Schensted row insertion of sigma(1), ..., sigma(n).

    Each value bumps the leftmost larger entry of the current row into the
    next row; position i is recorded in q where the new cell appears.

    Args:
        sigma (Permutation): Any permutation.

    Returns:
        TableauPair: (P, Q) = RSK(sigma).
    """
    p: list[list[int]] = []
    q: list[list[int]] = []
    for i, value in enumerate(sigma, start=1):
        row = 0
        while True:
            if row == len(p):
                p.append([value])
                q.append([i])
                break
            column = bisect_right(p[row], value)
            if column == len(p[row]):
                p[row].append(value)
                q[row].append(i)
                break
            value, p[row][column] = p[row][column], value
            row += 1
    return TableauPair(Tableau(p), Tableau(q))


def rsk_inverse(pair: TableauPair) -> Permutation:
    """
    Undo rsk: remove n, n-1, ..., 1 from Q and reverse-bump the matching
    corner of P up to the first row.

    Raises:
        TableauError: If P is not standard.
    """
    if not pair.p.is_standard():
        raise TableauError("insertion tableau is not standard")
    p = pair.p.to_rows()
    q = pair.q.to_rows()
    n = pair.q.n
    values = [0] * n
    for i in range(n, 0, -1):
        # the largest recorded index always sits at the end of a row
        row = next(r for r, entries in enumerate(q) if entries[-1] == i)
        q[row].pop()
        value = p[row].pop()
        if not p[row]:
            p.pop()
            q.pop()
        for upper in range(row - 1, -1, -1):
            column = bisect_left(p[upper], value) - 1
            value, p[upper][column] = p[upper][column], value
        values[i - 1] = value
    return Permutation(values)
