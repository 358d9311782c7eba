from dataclasses import dataclass

from ..perm.permutation import Permutation


@dataclass(frozen=True)
class Matching:
    """
    Matched pairs (excedance value, non-excedance position), in emission order.

    On a 321-avoiding permutation both coordinates strictly increase; on
    other inputs the excedance values can come out of order (4 3 1 2 gives 4, 3).
    """
    pairs: tuple[tuple[int, int], ...]

    @property
    def excedance_values(self) -> tuple[int, ...]:
        return tuple(value for value, _ in self.pairs)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(position for _, position in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def matching(sigma: Permutation) -> Matching:
    """
    Pair excedance values of sigma with non-excedance positions.

    Two pointers walk the excedances e_1 < ... < e_k and the non-excedances
    a_1 < ... < a_{n-k}. When e_p lies right of a_q the non-excedance is
    skipped; when sigma(e_p) < sigma(a_q) the excedance is skipped; otherwise
    (sigma(e_p), a_q) is emitted and both pointers advance.

    On a 321-avoiding sigma the matched values and positions are the second
    rows of P and Q in RSK(sigma).
    """
    n = len(sigma)
    excedances = [i for i in range(1, n + 1) if sigma(i) > i]
    non_excedances = [i for i in range(1, n + 1) if sigma(i) <= i]
    pairs: list[tuple[int, int]] = []
    p = q = 0
    while p < len(excedances) and q < len(non_excedances):
        e, a = excedances[p], non_excedances[q]
        if e > a:
            q += 1
        elif sigma(e) < sigma(a):
            p += 1
        else:
            pairs.append((sigma(e), a))
            p += 1
            q += 1
    return Matching(tuple(pairs))
