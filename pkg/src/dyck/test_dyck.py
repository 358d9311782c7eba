import pytest
from .DyckError import DyckError
from .dyck import (CenteredSplit, DyckPath, all_dyck_paths, centered_multitunnels, halves, is_dyck_word, odot,
                   parse, tunnel_counts, tunnel_decomposition, tunnels)
from ..parsing.LexerError import LexerError
from ..parsing.ParserError import ParserError

EIGHT_STEP_PATH = "ududuuuddudduudd"


def test_parse():
    # (text, expected steps, test name)
    test_cases = [
        (EIGHT_STEP_PATH, EIGHT_STEP_PATH, "Eight step path"),
        ("ud", "ud", "Single tunnel"),
        ("UuDd", "uudd", "Mixed case"),
        ("(()())", "uududd", "Parentheses"),
        ("", "", "Empty path"),
    ]
    for text, expected, test_name in test_cases:
        assert parse(text).steps == expected, f"Test failed: {test_name}"


def test_parse_errors():
    test_cases = [
        ("du", DyckError, "DyckError at position 1: prefix goes below the axis", "Prefix violation"),
        ("uud", DyckError, "DyckError at position 3: unbalanced word", "Unbalanced"),
        ("udd u", DyckError, "DyckError at position 3: prefix goes below the axis", "Late violation"),
        ("uxd", LexerError, "LexerError at position 2: Invalid character", "Foreign letter"),
        ("u1d", ParserError, "ParserError: Unexpected number '1' in a Dyck word", "Digit"),
    ]
    for text, error_type, expected_message, test_name in test_cases:
        with pytest.raises(error_type) as error:
            parse(text)
        assert expected_message == str(error.value), f"Test failed: {test_name}"


def test_all_dyck_paths_counts():
    catalan = [1, 1, 2, 5, 14, 42, 132, 429]
    for n, expected in enumerate(catalan):
        paths = all_dyck_paths(n)
        assert len(paths) == expected, f"Test failed: number of paths of semilength {n}"
        assert len(set(paths)) == expected, f"Test failed: distinct paths of semilength {n}"
        assert all(is_dyck_word(p.steps) for p in paths), f"Test failed: validity at semilength {n}"


def test_tunnel_counts():
    test_cases = [
        (EIGHT_STEP_PATH, (4, 1, 3), "Eight step path"),
        ("ud", (0, 1, 0), "Single tunnel"),
        ("uuuddd", (0, 3, 0), "Pyramid"),
        ("udud", (1, 0, 1), "Two peaks"),
        ("udududud", (2, 0, 2), "Four peaks"),
    ]
    for steps, expected, test_name in test_cases:
        assert tunnel_counts(DyckPath(steps)) == expected, f"Test failed: {test_name}"

    for n in range(1, 7):
        assert tunnel_counts(DyckPath("u" * n + "d" * n)) == (0, n, 0), f"Test failed: pyramid of height {n}"


def test_tunnel_structure():
    for n in range(0, 7):
        for path in all_dyck_paths(n):
            found = tunnels(path)
            assert len(found) == n, f"Test failed: one tunnel per up-step in {path}"
            assert [t.up_index for t in found] == list(range(1, n + 1)), f"Test failed: ordering in {path}"
            assert sorted(t.down_index for t in found) == list(range(1, n + 1)), f"Test failed: down-steps in {path}"
            for tunnel in found:
                a, b, c = tunnel_decomposition(path, tunnel)
                assert a + "u" + b + "d" + c == path.steps, f"Test failed: decomposition of {path}"
                assert is_dyck_word(b) and is_dyck_word(a + c), f"Test failed: AuBdC parts of {path}"


def test_halves_and_odot():
    left, right = halves(DyckPath(EIGHT_STEP_PATH))
    assert (left, right) == ("ududuuud", "dudduudd"), "Test failed: halves of the eight step path"

    empty = DyckPath("")
    for n in range(0, 5):
        for path in all_dyck_paths(n):
            assert odot(path, empty) == path, f"Test failed: right identity on {path}"
            left, right = halves(path)
            assert left.count("d") == right.count("u"), f"Test failed: balanced halves of {path}"

    assert odot(DyckPath("ud"), DyckPath("ud")) == DyckPath("uudd"), "Test failed: ud ⊙ ud"
    assert odot(DyckPath("uudd"), DyckPath("ud")) == DyckPath("uuuddd"), "Test failed: pyramid ⊙ ud"


def test_centered_multitunnels():
    splits = centered_multitunnels(DyckPath(EIGHT_STEP_PATH))
    assert len(splits) == 3, "Test failed: three centered multitunnels"
    assert splits[0] == CenteredSplit("", EIGHT_STEP_PATH, ""), "Test failed: whole path split"
    assert centered_multitunnels(DyckPath("ud")) == [CenteredSplit("", "ud", "")], "Test failed: single tunnel"
    assert centered_multitunnels(DyckPath("")) == [], "Test failed: empty path"

    for n in range(1, 7):
        for path in all_dyck_paths(n):
            for split in centered_multitunnels(path):
                assert len(split.prefix) == len(split.suffix), f"Test failed: symmetric cut of {path}"
                assert split.middle and is_dyck_word(split.middle), f"Test failed: middle of {path}"
                assert is_dyck_word(split.prefix + split.suffix), f"Test failed: outer part of {path}"
