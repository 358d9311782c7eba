from .DyckError import DyckError
from .dyck import DyckPath
from ..patterns.patterns import avoids
from ..perm.permutation import Permutation

PATTERN_132 = Permutation((1, 3, 2))


def phi_inv(path: DyckPath) -> Permutation:
    """
    Map a Dyck path to a 132-avoiding permutation.

    Up-steps are numbered n down to 1 and down-steps 1 up to n, left to right;
    the permutation sends the number of each up-step to the number of the
    down-step closing its tunnel, i.e. sigma(n+1-i) = j when the i-th up-step
    is matched with the j-th down-step.
    """
    n = path.n
    values = [0] * n
    open_ups: list[int] = []
    ups = downs = 0
    for step in path.steps:
        if step == "u":
            ups += 1
            open_ups.append(ups)
        else:
            downs += 1
            values[n - open_ups.pop()] = downs
    return Permutation(values)


def phi(sigma: Permutation) -> DyckPath:
    """
    Inverse of phi_inv on 132-avoiding permutations.

    The walk is rebuilt step by step: a down-step is forced exactly when the
    most recent open up-step is matched with the next down-step number.

    Raises:
        DyckError: If sigma contains 132.
    """
    if not avoids(sigma, PATTERN_132):
        raise DyckError(f"{sigma} is not 132-avoiding")
    n = len(sigma)
    steps: list[str] = []
    open_ups: list[int] = []
    next_up = next_down = 1
    while next_down <= n:
        if open_ups and sigma(n + 1 - open_ups[-1]) == next_down:
            open_ups.pop()
            steps.append("d")
            next_down += 1
        elif next_up <= n:
            open_ups.append(next_up)
            steps.append("u")
            next_up += 1
        else:
            raise DyckError(f"{sigma} has no matching Dyck path")
    return DyckPath("".join(steps))
