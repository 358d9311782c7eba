import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from ..bijections.gamma import gamma
from ..bijections.theta import theta_composed, theta_inverse, theta_recursive
from ..distributions.catalan import catalan_by_enumeration, catalan_qp, inv_dist_check
from ..distributions.cfrac import cfrac_series, crs_nes_levels, qp_catalan_levels
from ..distributions.distribution import distribution
from ..distributions.wilf import wilf_partition
from ..dyck.dyck import all_dyck_paths, centered_multitunnels, tunnel_counts
from ..dyck.phi import phi, phi_inv
from ..patterns.patterns import enumerate_avoiders, is_nonnesting
from ..perm.decomposition import product_components, sum_components
from ..perm.operators import crossing_delta, insert_at, rci
from ..perm.permutation import Permutation, parse_permutation
from ..perm.statistics import crs, exc, fp, inv, nes
from ..tableaux.psi import psi

_logger = logging.getLogger(__name__)

P321 = Permutation((3, 2, 1))
P132 = Permutation((1, 3, 2))
S3 = [Permutation(values) for values in permutations((1, 2, 3))]


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    detail: str


Check = Callable[[int, int], str | None]


def _all_permutations(n: int):
    return (Permutation(values) for values in permutations(range(1, n + 1)))


def _triple(sigma: Permutation) -> tuple[int, int, int]:
    return fp(sigma), exc(sigma), crs(sigma)


def check_theta(n_max: int, jobs: int) -> str | None:
    for n in range(0, n_max + 1):
        avoiders = list(enumerate_avoiders(n, [P321]))
        images = [theta_recursive(sigma) for sigma in avoiders]
        if set(images) != set(enumerate_avoiders(n, [P132])) or len(set(images)) != len(images):
            return f"not a bijection onto S_{n}(132)"
        for sigma, image in zip(avoiders, images):
            if _triple(sigma) != _triple(image):
                return f"(fp, exc, crs) differs on {sigma}"
            if theta_composed(sigma) != image:
                return f"recursive and composed forms differ on {sigma}"
            if theta_inverse(image) != sigma:
                return f"inverse fails on {image}"
    return None


def check_gamma(n_max: int, jobs: int) -> str | None:
    for n in range(0, n_max + 1):
        for sigma in enumerate_avoiders(n, [P321]):
            image = gamma(sigma)
            if image != theta_recursive(rci(sigma)):
                return f"gamma differs from theta . rci on {sigma}"
            if _triple(sigma) != _triple(image):
                return f"(fp, exc, crs) differs on {sigma}"
    return None


def check_tunnels(n_max: int, jobs: int) -> str | None:
    for n in range(0, n_max + 1):
        for path in all_dyck_paths(n):
            sigma = phi_inv(path)
            lt, ct, rt = tunnel_counts(path)
            if (fp(sigma), exc(sigma)) != (ct, rt):
                return f"(fp, exc) against (ct, rt) fails on {path}"
            if phi(sigma) != path:
                return f"phi round trip fails on {path}"
        for sigma in enumerate_avoiders(n, [P321]):
            lt, ct, rt = tunnel_counts(psi(sigma))
            if (fp(sigma), exc(sigma)) != (ct, rt):
                return f"psi exchange fails on {sigma}"
    return None


def check_components(n_max: int, jobs: int) -> str | None:
    for n in range(1, n_max + 1):
        for sigma in enumerate_avoiders(n, [P321]):
            count = len(sum_components(sigma))
            if count != len(centered_multitunnels(psi(sigma))):
                return f"multitunnel count differs on {sigma}"
            if count != len(product_components(theta_recursive(sigma))):
                return f"product factor count differs on {sigma}"
    return None


def check_crossing_delta(n_max: int, jobs: int) -> str | None:
    for n in range(0, min(n_max, 5) + 1):
        for pi in _all_permutations(n):
            base = crs(pi)
            for a in range(1, n + 2):
                for b in range(1, a + 1):
                    if crs(insert_at(pi, a, b)) != base + crossing_delta(pi, a, b).delta:
                        return f"delta fails on {pi} at ({a},{b})"
    return None


def check_arcs(n_max: int, jobs: int) -> str | None:
    for n in range(0, min(n_max, 7) + 1):
        for sigma in _all_permutations(n):
            if inv(sigma) != 2 * nes(sigma) + crs(sigma) + exc(sigma):
                return f"inv identity fails on {sigma}"
            for i in range(1, n + 1):
                if sigma(i) == i:
                    over = sum(1 for j in range(1, i) if sigma(j) > i)
                    under = sum(1 for j in range(i + 1, n + 1) if sigma(j) < i)
                    if over != under:
                        return f"fixed point {i} of {sigma} is unbalanced"
    return None


def check_nonnesting(n_max: int, jobs: int) -> str | None:
    for n in range(0, n_max + 1):
        nonnesting = [sigma for sigma in _all_permutations(n) if is_nonnesting(sigma)]
        if nonnesting != list(enumerate_avoiders(n, [P321])):
            return f"nonnesting permutations differ from S_{n}(321)"
    return None


def check_catalan(n_max: int, jobs: int) -> str | None:
    series = cfrac_series(qp_catalan_levels(), n_max)
    for n in range(0, n_max + 1):
        recurrence = catalan_qp(n).poly
        if series[n] != recurrence:
            return f"continued fraction differs at n={n}"
        for pattern in ("321", "132", "213"):
            if catalan_by_enumeration(n, parse_permutation(pattern), jobs) != recurrence:
                return f"enumeration over S_{n}({pattern}) differs"
        if not inv_dist_check(n, jobs).equal:
            return f"inversion polynomials differ at n={n}"
    return None


def check_crs_nes(n_max: int, jobs: int) -> str | None:
    series = cfrac_series(crs_nes_levels(), n_max)
    for n in range(0, n_max + 1):
        poly = distribution(n, [], ["crs", "nes"], jobs=jobs)
        if poly != distribution(n, [], ["crs", "nes"], {"crs": "y", "nes": "x"}, jobs):
            return f"(crs, nes) is not symmetric at n={n}"
        if series[n] != poly:
            return f"continued fraction differs at n={n}"
    return None


EXPECTED_PARTITIONS: dict[tuple[str, ...], list[list[str]]] = {
    ("nes",): [["123"], ["132", "213"], ["231", "312"], ["321"]],
    ("crs",): [["123"], ["132", "213", "321"], ["231"], ["312"]],
    ("crs", "nes"): [["123"], ["132", "213"], ["231"], ["312"], ["321"]],
    ("fp", "exc", "inv", "crs", "nes"): [["123"], ["132", "213"], ["231"], ["312"], ["321"]],
    ("fp", "inv", "nes"): [["123"], ["132", "213"], ["231", "312"], ["321"]],
    ("fp", "exc", "crs"): [["123"], ["132", "213", "321"], ["231"], ["312"]],
}


def check_wilf(n_max: int, jobs: int) -> str | None:
    # small lengths cannot separate the classes yet
    if n_max < 4:
        return None
    for stats, expected in EXPECTED_PARTITIONS.items():
        found = wilf_partition(S3, stats, n_max, jobs).partition()
        if found != expected:
            return f"{','.join(stats)} classes are {found}"
    return None


SINGLE_PATTERN_POLYNOMIALS = {
    "123": ("7+6x+x²", "4+8x+2x²"),
    "132": ("8+4x+2x²", "7+5x+2x²"),
    "213": ("8+4x+2x²", "7+5x+2x²"),
    "321": ("8+4x+2x²", "14"),
    "231": ("8+5x+x²", "8+5x+x²"),
    "312": ("13+x", "8+5x+x²"),
}


def check_single_patterns(n_max: int, jobs: int) -> str | None:
    for pattern, (crossings, nestings) in SINGLE_PATTERN_POLYNOMIALS.items():
        tau = [parse_permutation(pattern)]
        if distribution(4, tau, ["crs"], jobs=jobs).pretty() != crossings:
            return f"Cr_4({pattern}) differs"
        if distribution(4, tau, ["nes"], jobs=jobs).pretty() != nestings:
            return f"Nes_4({pattern}) differs"
    return None


IDENTITIES: dict[str, Check] = {
    "theta-bijection": check_theta,
    "gamma-theta-rci": check_gamma,
    "tunnel-statistics": check_tunnels,
    "component-counts": check_components,
    "crossing-delta": check_crossing_delta,
    "inv-identity": check_arcs,
    "nonnesting-321": check_nonnesting,
    "catalan-modes": check_catalan,
    "crs-nes-symmetry": check_crs_nes,
    "wilf-classes": check_wilf,
    "single-patterns": check_single_patterns,
}


def run_identity_suite(n_max: int, jobs: int = 1) -> list[IdentityResult]:
    """Run every registered identity up to n_max, in registry order."""
    results = []
    for name, check in IDENTITIES.items():
        _logger.info("verify %s up to n=%d", name, n_max)
        failure = check(n_max, jobs)
        if failure is not None:
            _logger.warning("verify %s failed: %s", name, failure)
        results.append(IdentityResult(name, failure is None, failure or "ok"))
    return results
