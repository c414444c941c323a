"""Hypothesis strategies for semifield values and points."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from tropical_flags.points import ParamPoint
from tropical_flags.semifield import RATIONAL, TROPICAL

trop_values = st.integers(min_value=-50, max_value=50)
rat_values = st.builds(Fraction, st.integers(1, 30), st.integers(1, 30))


def values(field):
    return trop_values if field is TROPICAL else rat_values


def points(datum, field):
    return st.builds(
        lambda w, cs: ParamPoint(datum, field, w, tuple(cs)),
        st.sampled_from(datum.reduced_words),
        st.lists(values(field), min_size=datum.nu, max_size=datum.nu),
    )


def weights(datum, field):
    return st.lists(values(field), min_size=datum.n, max_size=datum.n).map(tuple)


FIELDS = [TROPICAL, RATIONAL]
