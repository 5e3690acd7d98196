from fractions import Fraction

from hypothesis import strategies as st

from recprs.poly import Poly

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def polys(draw, max_degree=10, coeffs=rationals, nonzero=False):
    cs = draw(st.lists(coeffs, min_size=1, max_size=max_degree + 1))
    p = Poly(cs)
    if nonzero and p.is_zero():
        p = Poly((draw(st.integers(1, 9)),))
    return p


@st.composite
def int_polys(draw, min_degree=0, max_degree=8):
    d = draw(st.integers(min_degree, max_degree))
    cs = draw(st.lists(small_ints, min_size=d, max_size=d))
    lead = draw(small_ints.filter(bool))
    return Poly(cs + [lead])


def P(*descending):
    """Polynomial from descending integer coefficients."""
    return Poly.from_descending(descending)


def pytest_terminal_summary(terminalreporter):
    lines = getattr(terminalreporter.config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def pytest_configure(config):
    config._acceptance_lines = []
