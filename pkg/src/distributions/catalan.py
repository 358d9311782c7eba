import math
from dataclasses import dataclass
from functools import lru_cache

from .distribution import distribution
from .multipoly import MultiPoly
from ..perm.permutation import Permutation

QP_VARS = ("q", "p")
PATTERN_321 = Permutation((3, 2, 1))


def catalan_number(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class CatalanQP:
    n: int
    poly: MultiPoly


@lru_cache(maxsize=None)
def _catalan_qp_poly(n: int) -> MultiPoly:
    if n <= 1:
        return MultiPoly.constant(1, QP_VARS)
    q = MultiPoly.variable("q")
    p = MultiPoly.variable("p")
    total = MultiPoly.constant(0, QP_VARS)
    for k in range(n - 1):
        total = total + p ** k * _catalan_qp_poly(k) * _catalan_qp_poly(n - 1 - k)
    return _catalan_qp_poly(n - 1) + q * total


def catalan_qp(n: int) -> CatalanQP:
    """
    C_n(q, p) from C_n = C_{n-1} + q * sum_{k=0}^{n-2} p^k C_k C_{n-1-k},
    with C_0 = C_1 = 1.

    The result is the (exc, crs) distribution over S_n(321).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return CatalanQP(n, _catalan_qp_poly(n))


@lru_cache(maxsize=None)
def q_inversion_poly(n: int) -> MultiPoly:
    """I_n(q) = I_{n-1} + sum_{k=0}^{n-2} q^{k+1} I_k I_{n-1-k}, with I_0 = I_1 = 1."""
    if n <= 1:
        return MultiPoly.constant(1, ("q",))
    q = MultiPoly.variable("q")
    result = q_inversion_poly(n - 1)
    for k in range(n - 1):
        result = result + q ** (k + 1) * q_inversion_poly(k) * q_inversion_poly(n - 1 - k)
    return result


@dataclass(frozen=True)
class InvDistCheck:
    n: int
    i_n: MultiPoly
    c_n_qq: MultiPoly
    enumerated: MultiPoly

    @property
    def equal(self) -> bool:
        return self.i_n == self.c_n_qq == self.enumerated


def inv_dist_check(n: int, jobs: int = 1) -> InvDistCheck:
    """I_n(q) three ways: its recurrence, C_n(q, q), and sum of q^inv over S_n(321)."""
    return InvDistCheck(
        n,
        q_inversion_poly(n),
        catalan_qp(n).poly.substitute("p", "q"),
        distribution(n, [PATTERN_321], ["inv"], {"inv": "q"}, jobs),
    )


def catalan_by_enumeration(n: int, pattern: Permutation = PATTERN_321, jobs: int = 1) -> MultiPoly:
    """sum of q^exc p^crs over S_n(pattern)."""
    return distribution(n, [pattern], ["exc", "crs"], {"exc": "q", "crs": "p"}, jobs)
