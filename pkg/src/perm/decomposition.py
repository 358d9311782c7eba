from dataclasses import dataclass

from .PermutationError import PermutationError
from .operators import shift_add, shift_from
from .permutation import Permutation, reduce
from ..patterns.patterns import avoids

PATTERN_132 = Permutation((1, 3, 2))


def direct_sum(alpha: Permutation, beta: Permutation) -> Permutation:
    """alpha ⊕ beta = alpha . beta^{+|alpha|}."""
    return Permutation(alpha.values + shift_add(beta.values, len(alpha)))


def sum_components(sigma: Permutation) -> list[Permutation]:
    """
    Split sigma into its ⊕-irreducible components, left to right.

    A cut falls after position l whenever sigma(1..l) is exactly {1..l}.
    """
    components: list[Permutation] = []
    start = 0
    running_max = 0
    for l, value in enumerate(sigma, start=1):
        running_max = max(running_max, value)
        if running_max == l:
            components.append(reduce(sigma.values[start:l]))
            start = l
    return components


def is_sum_irreducible(sigma: Permutation) -> bool:
    return len(sum_components(sigma)) == 1


@dataclass(frozen=True)
class TSet:
    """T(sigma) = {i : sigma^{-1}(i) > i < sigma(i)}, stored ascending."""
    members: tuple[int, ...]

    @property
    def k(self) -> int:
        # insertion point of the direct product
        return 1 + len(self.members)

    def is_prefix(self) -> bool:
        return self.members == tuple(range(1, len(self.members) + 1))

    def __len__(self) -> int:
        return len(self.members)


def t_set(sigma: Permutation) -> TSet:
    """
    Compute T(sigma).

    Any permutation is accepted; the set is guaranteed to be a prefix
    {1..t} with t <= n/2 only when sigma avoids 132.
    """
    return TSet(tuple(i for i in range(1, len(sigma) + 1)
                      if sigma.position_of(i) > i and sigma(i) > i))


def _require_132_avoiding(*operands: Permutation) -> None:
    for operand in operands:
        if not avoids(operand, PATTERN_132):
            raise PermutationError(f"{operand} is not 132-avoiding")


def direct_product(alpha: Permutation, beta: Permutation) -> Permutation:
    """
    alpha ⊗ beta for 132-avoiding operands.

    With k = 1 + |T(beta)| and m = |alpha| the result is
    beta^{k⋊m}(1..k-1) . alpha^{+(k-1)} . beta^{k⋊m}(k..|beta|).

    Raises:
        PermutationError: If an operand contains 132.
    """
    _require_132_avoiding(alpha, beta)
    k = t_set(beta).k
    shifted = shift_from(beta.values, k, len(alpha))
    return Permutation(shifted[:k - 1] + shift_add(alpha.values, k - 1) + shifted[k - 1:])


def _split_product(sigma: Permutation) -> tuple[Permutation, Permutation] | None:
    # The block alpha^{+(k-1)} occupies positions k..k+m-1 with values k..k+m-1,
    # so a split is a candidate block that re-composes to sigma. The smallest
    # block size yields the leftmost irreducible factor.
    n = len(sigma)
    for m in range(1, n):
        for k in range(1, n - m + 2):
            block = sigma.values[k - 1:k - 1 + m]
            if set(block) != set(range(k, k + m)):
                continue
            alpha = reduce(block)
            beta = reduce(sigma.values[:k - 1] + sigma.values[k - 1 + m:])
            if t_set(beta).k == k and direct_product(alpha, beta) == sigma:
                return alpha, beta
    return None


def product_components(sigma: Permutation) -> list[Permutation]:
    """
    Factor a 132-avoiding permutation into ⊗-irreducible factors.

    Returns:
        list[Permutation]: Factors c1, ..., cr with c1 ⊗ c2 ⊗ ... ⊗ cr == sigma.
    """
    _require_132_avoiding(sigma)
    factors: list[Permutation] = []
    rest = sigma
    while True:
        split = _split_product(rest)
        if split is None:
            if len(rest) > 0:
                factors.append(rest)
            return factors
        alpha, rest = split
        factors.extend(product_components(alpha))


def is_product_irreducible(sigma: Permutation) -> bool:
    return len(product_components(sigma)) == 1


def product_of(factors: list[Permutation]) -> Permutation:
    """Fold a factor list back with ⊗ (the operation is associative)."""
    result = factors[-1]
    for factor in reversed(factors[:-1]):
        result = direct_product(factor, result)
    return result
