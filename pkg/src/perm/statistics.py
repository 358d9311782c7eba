from dataclasses import asdict, dataclass
from typing import Literal

from .permutation import Permutation


ArcKind = Literal["upper-crossing", "lower-crossing", "upper-nesting", "lower-nesting"]


@dataclass(frozen=True)
class ArcPair:
    """A pair of positions i < j whose arcs i -> sigma(i) and j -> sigma(j) cross or nest."""
    i: int
    j: int
    kind: ArcKind


@dataclass(frozen=True)
class Statistics:
    fp: int
    exc: int
    crs: int
    nes: int
    inv: int
    maj: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def classify_pair(sigma: Permutation, i: int, j: int) -> ArcKind | None:
    """
    Classify the positions i < j of sigma.

    Arcs i -> sigma(i) are upper when sigma(i) > i and lower otherwise, so a
    fixed point is a lower arc of length zero.

    Returns:
        ArcKind | None: The kind of the pair, or None when the arcs neither
        cross nor nest.
    """
    si, sj = sigma(i), sigma(j)
    if j < si < sj:
        return "upper-crossing"
    if si < sj <= i:
        return "lower-crossing"
    if j < sj < si:
        return "upper-nesting"
    if sj < si <= i:
        return "lower-nesting"
    return None


def arc_pairs(sigma: Permutation) -> list[ArcPair]:
    """
    List every crossing and nesting of sigma, ordered by (i, j).
    """
    pairs: list[ArcPair] = []
    n = len(sigma)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            kind = classify_pair(sigma, i, j)
            if kind is not None:
                pairs.append(ArcPair(i, j, kind))
    return pairs


def fp(sigma: Permutation) -> int:
    return sum(1 for i, v in enumerate(sigma, start=1) if v == i)


def exc(sigma: Permutation) -> int:
    return sum(1 for i, v in enumerate(sigma, start=1) if v > i)


def crs(sigma: Permutation) -> int:
    return sum(1 for pair in arc_pairs(sigma) if pair.kind.endswith("crossing"))


def nes(sigma: Permutation) -> int:
    return sum(1 for pair in arc_pairs(sigma) if pair.kind.endswith("nesting"))


def inv(sigma: Permutation) -> int:
    values = sigma.values
    return sum(1 for a in range(len(values)) for b in range(a + 1, len(values)) if values[a] > values[b])


def maj(sigma: Permutation) -> int:
    # descents at positions i with sigma(i) > sigma(i+1)
    values = sigma.values
    return sum(i for i in range(1, len(values)) if values[i - 1] > values[i])


def statistics(sigma: Permutation) -> Statistics:
    """
    Compute fp, exc, crs, nes, inv and maj of sigma in one pass over its pairs.
    """
    crossings = nestings = 0
    for pair in arc_pairs(sigma):
        if pair.kind.endswith("crossing"):
            crossings += 1
        else:
            nestings += 1
    return Statistics(fp=fp(sigma), exc=exc(sigma), crs=crossings, nes=nestings,
                      inv=inv(sigma), maj=maj(sigma))

