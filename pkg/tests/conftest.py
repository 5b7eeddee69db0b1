from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from hnpkit.linalg import BilinearOp, LinearMap, Vector

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def vectors(n):
    return st.lists(small_rationals, min_size=n, max_size=n).map(Vector)


def linear_maps(n):
    return st.lists(st.lists(small_rationals, min_size=n, max_size=n), min_size=n, max_size=n).map(LinearMap)


def bilinear_ops(n, elements=small_rationals):
    row = st.lists(elements, min_size=n, max_size=n)
    return st.lists(st.lists(row, min_size=n, max_size=n), min_size=n, max_size=n).map(BilinearOp)


def sparse_ints():
    """Mostly zero, so random products have a chance of satisfying identities."""
    return st.sampled_from([Fraction(0)] * 4 + [Fraction(1), Fraction(-1), Fraction(2)])


# Criterion verdicts collected by test_acceptance.py and printed at the end of the run.
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    def record(number: int, ok: bool, text: str) -> None:
        ACCEPTANCE[number] = (ok, text)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}")
        assert ok, text

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}")
