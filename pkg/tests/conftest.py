from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from negder.counterexamples import CounterexampleParams, build_counterexample
from negder.poly import Polynomial, parse_polynomial

settings.register_profile(
    "negder", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("negder")

NVARS = 3

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda c: c != 0)
small_ints = st.integers(-4, 4).filter(lambda c: c != 0)


def exponents(n=NVARS, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def polynomials(n=NVARS, max_terms=5, max_exp=3, coeffs=coefficients):
    return st.dictionaries(exponents(n, max_exp), coeffs, max_size=max_terms).map(
        lambda terms: Polynomial(terms, n)
    )


@pytest.fixture(scope="session")
def example6():
    """The n = 6 member of the codimension-two family with its degree -1 derivation."""
    return build_counterexample(CounterexampleParams(6))


def poly(text, variables):
    return parse_polynomial(text, variables)


def frac(x):
    return Fraction(x)


ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, {})

    def record(number: int, passed: bool, detail: str):
        line = f"{'PASS' if passed else 'FAIL'} criterion {number:>2}: {detail}"
        lines[number] = line
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
