from .TableauError import TableauError
from .rsk import Tableau, TableauPair, rsk, rsk_inverse
from ..dyck.dyck import DyckPath, halves
from ..perm.permutation import Permutation


def psi(sigma: Permutation) -> DyckPath:
    """
    Map a 321-avoiding permutation to a Dyck path through its RSK tableaux.

    The left half reads P for i = 1..n (u for the first row, d for the
    second); the right half reads Q for j = n..1 (u for the second row, d
    for the first).

    Raises:
        TableauError: If P has more than two rows.
    """
    pair = rsk(sigma)
    if len(pair.p.rows) > 2:
        raise TableauError(f"{sigma} is not 321-avoiding")
    n = len(sigma)
    left = "".join("u" if pair.p.row_of(i) == 0 else "d" for i in range(1, n + 1))
    right = "".join("u" if pair.q.row_of(j) == 1 else "d" for j in range(n, 0, -1))
    return DyckPath(left + right)


def psi_inv(path: DyckPath) -> Permutation:
    """Rebuild the two-row tableaux read off the path and undo RSK."""
    left, right = halves(path)
    n = path.n
    p_rows = [[i for i in range(1, n + 1) if left[i - 1] == "u"],
              [i for i in range(1, n + 1) if left[i - 1] == "d"]]
    q_rows = [[j for j in range(1, n + 1) if right[n - j] == "d"],
              [j for j in range(1, n + 1) if right[n - j] == "u"]]
    return rsk_inverse(TableauPair(Tableau(p_rows), Tableau(q_rows)))
