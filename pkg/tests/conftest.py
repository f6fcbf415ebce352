from hypothesis import strategies as st

from logpoisson.polynomial import BiPoly

small_coeff = st.fractions(min_value=-9, max_value=9, max_denominator=6)
monomial = st.tuples(st.integers(0, 5), st.integers(0, 5))


@st.composite
def polys(draw, max_terms=6):
    terms = draw(st.dictionaries(monomial, small_coeff, max_size=max_terms))
    return BiPoly(terms)


def P(text):
    from logpoisson import parse_poly

    return parse_poly(text)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
