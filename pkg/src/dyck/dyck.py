from dataclasses import dataclass
from typing import Literal

from .DyckError import DyckError
from ..parsing.lexer import Lexer
from ..parsing.parser import Parser


Side = Literal["left", "centered", "right"]


class DyckPath:
    """
    A Dyck path of semilength n, stored as a lowercase word over "u" and "d".

    Every prefix has at least as many up-steps as down-steps and the whole
    word is balanced.
    """

    __slots__ = ("steps",)

    def __init__(self, steps: str) -> None:
        height = 0
        for position, step in enumerate(steps, start=1):
            if step == "u":
                height += 1
            elif step == "d":
                height -= 1
            else:
                raise DyckError(f"invalid step {step!r}", position)
            if height < 0:
                raise DyckError("prefix goes below the axis", position)
        if height != 0:
            raise DyckError("unbalanced word", len(steps))
        object.__setattr__(self, "steps", steps)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("DyckPath is immutable")

    def __reduce__(self):
        return (DyckPath, (self.steps,))

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Heights after 0, 1, ..., 2n steps."""
        result = [0]
        for step in self.steps:
            result.append(result[-1] + (1 if step == "u" else -1))
        return result

    def __len__(self) -> int:
        return len(self.steps)

    def __eq__(self, value: object, /) -> bool:
        return isinstance(value, DyckPath) and self.steps == value.steps

    def __hash__(self) -> int:
        return hash(self.steps)

    def __repr__(self) -> str:
        return f"DyckPath({self.steps!r})"

    def __str__(self) -> str:
        return self.steps


def parse(word: str) -> DyckPath:
    """
    Parse a Dyck word written with u/d (either case) or with parentheses.

    Raises:
        LexerError: On characters that are not steps or whitespace.
        ParserError: On digits or commas.
        DyckError: On an unbalanced or prefix-negative word; the position is
            the 1-based step where the violation is detected.
    """
    return DyckPath(Parser(Lexer(word).tokens).parse_steps())


def is_dyck_word(steps: str) -> bool:
    try:
        DyckPath(steps)
    except DyckError:
        return False
    return True


def all_dyck_paths(n: int) -> list[DyckPath]:
    """Every Dyck path of semilength n, in lexicographic order (u < d)."""
    paths: list[DyckPath] = []

    def build(word: str, ups: int, downs: int) -> None:
        if ups == downs == n:
            paths.append(DyckPath(word))
            return
        if ups < n:
            build(word + "u", ups + 1, downs)
        if downs < ups:
            build(word + "d", ups, downs + 1)

    build("", 0, 0)
    return paths


def halves(path: DyckPath) -> tuple[str, str]:
    """The first n steps D^(L) and the last n steps D^(R)."""
    n = path.n
    return path.steps[:n], path.steps[n:]


def odot(first: DyckPath, second: DyckPath) -> DyckPath:
    """D1 ⊙ D2 = D1^(L) . D2 . D1^(R)."""
    left, right = halves(first)
    return DyckPath(left + second.steps + right)


@dataclass(frozen=True)
class Tunnel:
    """
    The horizontal segment joining an up-step to its matching down-step.

    start and end are the x-coordinates of the segment; doubled_midpoint is
    start + end, compared against 2n to decide the side.
    """
    up_index: int
    down_index: int
    start: int
    end: int
    doubled_midpoint: int
    side: Side

    @property
    def midpoint_x(self) -> float:
        return self.doubled_midpoint / 2


def tunnels(path: DyckPath) -> list[Tunnel]:
    """
    Match every up-step with its down-step, ordered by up-step.

    Returns:
        list[Tunnel]: Exactly n tunnels.
    """
    n = path.n
    stack: list[tuple[int, int]] = []
    found: list[Tunnel] = []
    ups = downs = 0
    for x, step in enumerate(path.steps):
        if step == "u":
            ups += 1
            stack.append((ups, x))
            continue
        downs += 1
        up_index, start = stack.pop()
        end = x + 1
        doubled = start + end
        if doubled < 2 * n:
            side: Side = "left"
        elif doubled == 2 * n:
            side = "centered"
        else:
            side = "right"
        found.append(Tunnel(up_index, downs, start, end, doubled, side))
    return sorted(found, key=lambda tunnel: tunnel.up_index)


def tunnel_counts(path: DyckPath) -> tuple[int, int, int]:
    """(lt, ct, rt): the numbers of left, centered and right tunnels."""
    sides = [tunnel.side for tunnel in tunnels(path)]
    return sides.count("left"), sides.count("centered"), sides.count("right")


def tunnel_decomposition(path: DyckPath, tunnel: Tunnel) -> tuple[str, str, str]:
    """Split D = A u B d C around a tunnel; B and A.C are Dyck words."""
    steps = path.steps
    return steps[:tunnel.start], steps[tunnel.start + 1:tunnel.end - 1], steps[tunnel.end:]


@dataclass(frozen=True)
class CenteredSplit:
    """A decomposition D = A.B.C with |A| = |C| and B, A.C Dyck words, B nonempty."""
    prefix: str
    middle: str
    suffix: str


def centered_multitunnels(path: DyckPath) -> list[CenteredSplit]:
    """
    Enumerate the centered multitunnels of a path through their D = ABC splits.

    Cuts are taken symmetric about x = n, outermost first; the split with
    A = C = ε always counts for a nonempty path.
    """
    steps = path.steps
    heights = path.heights()
    length = len(steps)
    splits: list[CenteredSplit] = []
    for cut in range(path.n):
        mirror = length - cut
        floor = heights[cut]
        # B is a Dyck word iff it returns to its starting height without going below it
        if heights[mirror] == floor and min(heights[cut:mirror + 1]) >= floor:
            splits.append(CenteredSplit(steps[:cut], steps[cut:mirror], steps[mirror:]))
    return splits
