from dataclasses import dataclass

from .BijectionError import BijectionError
from ..dyck.phi import phi_inv
from ..patterns.patterns import avoids
from ..perm.decomposition import direct_product, direct_sum
from ..perm.operators import insert_at
from ..perm.permutation import Permutation, delete_at, reduce
from ..tableaux.matching import matching
from ..tableaux.psi import psi

PATTERN_321 = Permutation((3, 2, 1))
PATTERN_132 = Permutation((1, 3, 2))


def require_avoiding(sigma: Permutation, pattern: Permutation) -> None:
    if not avoids(sigma, pattern):
        raise BijectionError(f"{sigma} is not {''.join(map(str, pattern))}-avoiding")


@dataclass(frozen=True)
class ThetaRow:
    """One prefix length of the recursion; insertion is None on the first row."""
    l: int
    prefix: Permutation
    insertion: tuple[int, int] | None
    image: Permutation


@dataclass(frozen=True)
class ThetaTrace:
    rows: tuple[ThetaRow, ...]

    @property
    def image(self) -> Permutation:
        return self.rows[-1].image if self.rows else Permutation(())

    @property
    def insertions(self) -> list[tuple[int, int]]:
        return [row.insertion for row in self.rows if row.insertion is not None]


def theta_composed(sigma: Permutation) -> Permutation:
    """Theta as the composition phi_inv . psi."""
    require_avoiding(sigma, PATTERN_321)
    return phi_inv(psi(sigma))


def theta_step(prefix: Permutation) -> tuple[int, int]:
    """
    The insertion that extends Theta from red(prefix(1..l-1)) to prefix.

    With k = prefix(l) and j - 1 the number of matched excedance values of
    the shorter word that are below k, the insertion is (l - k + j, j).
    """
    l = len(prefix)
    k = prefix(l)
    shorter = reduce(prefix.values[:-1])
    j = 1 + sum(1 for value in matching(shorter).excedance_values if value < k)
    return l - k + j, j


def theta_trace(sigma: Permutation) -> ThetaTrace:
    """
    Compute Theta prefix by prefix, recording every insertion.

    The loop runs over l = 2..n, so the depth does not grow with n.

    Raises:
        BijectionError: If sigma contains 321.
    """
    require_avoiding(sigma, PATTERN_321)
    n = len(sigma)
    if n == 0:
        return ThetaTrace(())
    image = Permutation((1,))
    rows = [ThetaRow(1, image, None, image)]
    for l in range(2, n + 1):
        prefix = reduce(sigma.values[:l])
        insertion = theta_step(prefix)
        image = insert_at(image, *insertion)
        rows.append(ThetaRow(l, prefix, insertion, image))
    return ThetaTrace(tuple(rows))


def theta_recursive(sigma: Permutation) -> Permutation:
    return theta_trace(sigma).image


def theta(sigma: Permutation) -> Permutation:
    return theta_recursive(sigma)


def minimum_non_excedance(alpha: Permutation) -> int:
    # alpha(n) <= n, so a non-excedance always exists for n >= 1
    return next(i for i in range(1, len(alpha) + 1) if alpha(i) <= i)


def theta_inverse(alpha: Permutation) -> Permutation:
    """
    Invert Theta on a 132-avoiding permutation.

    Each step removes the minimum non-excedance k of the current word and
    remembers the insertion (|alpha|, |alpha| + alpha(k) - k); the insertions
    are replayed from the singleton upward.

    Raises:
        BijectionError: If alpha contains 132.
    """
    require_avoiding(alpha, PATTERN_132)
    if len(alpha) == 0:
        return alpha
    insertions: list[tuple[int, int]] = []
    current = alpha
    while len(current) > 1:
        size = len(current)
        k = minimum_non_excedance(current)
        insertions.append((size, size + current(k) - k))
        current = delete_at(current, k)
    result = Permutation((1,))
    for a, b in reversed(insertions):
        result = insert_at(result, a, b)
    return result


@dataclass(frozen=True)
class SumProductCheck:
    """Theta(s1 ⊕ s2) next to Theta(s2) ⊗ Theta(s1)."""
    left: Permutation
    right: Permutation

    @property
    def equal(self) -> bool:
        return self.left == self.right


def theta_sum_product(first: Permutation, second: Permutation) -> SumProductCheck:
    require_avoiding(first, PATTERN_321)
    require_avoiding(second, PATTERN_321)
    return SumProductCheck(theta(direct_sum(first, second)),
                           direct_product(theta(second), theta(first)))
