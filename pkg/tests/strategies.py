"""Hypothesis strategies shared by the test modules"""

from hypothesis import strategies as st

from core.exactalg import MultiPoly
from core.projgeom import P1Point
from core.sextuple import Sextuple

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)

parameters = st.one_of(rationals.map(P1Point.from_value), st.just(P1Point.infinity()))

distinct_values = st.lists(rationals, min_size=6, max_size=6, unique=True)

sextuples = distinct_values.map(Sextuple.from_values)

# at most one letter at infinity
sextuples_with_infinity = st.tuples(distinct_values, st.integers(min_value=0, max_value=6)).map(
    lambda drawn: Sextuple.from_values([None if i == drawn[1] else v for i, v in enumerate(drawn[0])]))

monomials = st.tuples(*(st.integers(min_value=0, max_value=2) for _ in range(3)))
polynomials = st.lists(st.tuples(monomials, st.integers(min_value=-5, max_value=5)), max_size=4).map(
    lambda terms: MultiPoly({tuple(zip('abc', exps)): coeff for exps, coeff in terms}))

mobius_entries = st.tuples(*(st.integers(min_value=-6, max_value=6) for _ in range(4))).filter(
    lambda m: m[0] * m[3] - m[1] * m[2] != 0)

distinct_triples = st.lists(parameters, min_size=3, max_size=3, unique_by=lambda p: p.coords)
