from fractions import Fraction

from hypothesis import strategies as st

# multiplicities in [0, 1] with modest denominators, the exact regime the
# library is used in
unit_fractions = st.fractions(min_value=0, max_value=1, max_denominator=24)

small_sets = st.frozensets(unit_fractions, min_size=1, max_size=5)


def frac(text: str) -> Fraction:
    return Fraction(text)
