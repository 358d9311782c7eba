from . import identities
from .identities import IDENTITIES, run_identity_suite
from ..perm.statistics import inv


def test_suite_passes():
    results = run_identity_suite(4)
    assert [r.name for r in results] == list(IDENTITIES), "Test failed: registry order"
    for result in results:
        assert result.passed, f"Test failed: {result.name} ({result.detail})"
        assert result.detail == "ok", f"Test failed: {result.name} detail"


def test_single_checks():
    # (check, n_max, test name)
    test_cases = [
        (identities.check_theta, 6, "Theta up to six"),
        (identities.check_gamma, 6, "Gamma up to six"),
        (identities.check_tunnels, 6, "Tunnels up to six"),
        (identities.check_components, 6, "Components up to six"),
        (identities.check_wilf, 3, "Wilf skipped below four"),
    ]
    for check, n_max, test_name in test_cases:
        assert check(n_max, 1) is None, f"Test failed: {test_name}"


def test_detects_a_broken_statistic(monkeypatch):
    monkeypatch.setattr(identities, "crs", inv)
    results = {r.name: r for r in run_identity_suite(3)}
    assert not results["inv-identity"].passed, "Test failed: inv identity should fail"
    assert results["inv-identity"].detail.startswith("inv identity fails on"), "Test failed: detail"
    assert results["tunnel-statistics"].passed, "Test failed: unrelated identity"
