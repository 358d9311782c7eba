from dataclasses import dataclass
from typing import Sequence

from .PermutationError import PermutationError
from .permutation import Permutation


def reverse(sigma: Permutation) -> Permutation:
    return Permutation(reversed(sigma.values))


def complement(sigma: Permutation) -> Permutation:
    n = len(sigma)
    return Permutation(n + 1 - v for v in sigma)


def inverse(sigma: Permutation) -> Permutation:
    result = [0] * len(sigma)
    for i, v in enumerate(sigma, start=1):
        result[v - 1] = i
    return Permutation(result)


def rc(sigma: Permutation) -> Permutation:
    """rc(sigma)(n+1-i) = n+1-sigma(i)."""
    return reverse(complement(sigma))


def rci(sigma: Permutation) -> Permutation:
    """rci(sigma)(n+1-sigma(i)) = n+1-i."""
    return reverse(complement(inverse(sigma)))


def shift_add(word: Sequence[int], a: int) -> tuple[int, ...]:
    """The word sigma^{+a}: every entry increased by a."""
    return tuple(v + a for v in word)


def shift_from(word: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    """The word sigma^{a⋊b}: entries greater than or equal to a increased by b."""
    return tuple(v + b if v >= a else v for v in word)


def insert_at(sigma: Permutation, a: int, b: int) -> Permutation:
    """
    Insert the value b at position a, shifting the entries >= b up by one.

    Args:
        sigma (Permutation): The permutation of length n.
        a (int): Target position, 1..n+1.
        b (int): Inserted value, 1..n+1.

    Returns:
        Permutation: sigma^{(a,b)}, of length n+1.

    Raises:
        PermutationError: If a or b lies outside 1..n+1.
    """
    n = len(sigma)
    if not (1 <= a <= n + 1 and 1 <= b <= n + 1):
        raise PermutationError(f"insertion ({a},{b}) outside 1..{n + 1}")
    shifted = shift_from(sigma.values, b, 1)
    return Permutation(shifted[:a - 1] + (b,) + shifted[a - 1:])


def insert_block(sigma: Permutation, a: int, pi: Sequence[int]) -> Permutation:
    """
    sigma^{(a,pi)}: insert pi(1) at a, then pi(2) at a+1, and so on.

    pi may be any word whose successive insertions stay in range, which is how
    shifted blocks are spliced in.
    """
    if not 1 <= a <= len(sigma) + 1:
        raise PermutationError(f"block position {a} outside 1..{len(sigma) + 1}")
    result = sigma
    for offset, value in enumerate(pi):
        result = insert_at(result, a + offset, value)
    return result


@dataclass(frozen=True)
class CrossingDelta:
    A1: int
    A2: int
    A3: int
    A4: int

    @property
    def delta(self) -> int:
        return self.A1 + self.A2 + self.A3 - self.A4


def crossing_delta(pi: Permutation, a: int, b: int) -> CrossingDelta:
    """
    Crossings gained by inserting the lower arc a -> b into pi.

    For b <= i < a (i read both as a position and as a value of pi):
      A1 counts i with pi(i) < b,
      A2 counts i with pi^{-1}(i) >= a (the arc ending at i starts at or right of a, so after
         the insertion it starts strictly right of a),
      A3 counts i with pi^{-1}(i) < i < pi(i),
      A4 counts i with pi(i) < i < pi^{-1}(i).
    Then crs(insert_at(pi, a, b)) == crs(pi) + A1 + A2 + A3 - A4.

    Raises:
        PermutationError: If b > a or a lies outside 1..n+1.
    """
    n = len(pi)
    if b > a:
        raise PermutationError(f"crossing delta needs b <= a, got a={a}, b={b}")
    if not (1 <= b and a <= n + 1):
        raise PermutationError(f"insertion ({a},{b}) outside 1..{n + 1}")

    A1 = A2 = A3 = A4 = 0
    for i in range(b, a):
        image = pi(i)
        preimage = pi.position_of(i)
        if image < b:
            A1 += 1
        if preimage >= a:
            A2 += 1
        if preimage < i < image:
            A3 += 1
        if image < i < preimage:
            A4 += 1
    return CrossingDelta(A1, A2, A3, A4)
