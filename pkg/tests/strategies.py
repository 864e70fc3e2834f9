"""Shared hypothesis strategies."""

import numpy as np
from hypothesis import strategies as st

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
moderate = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
extended_r = st.one_of(
    st.floats(min_value=-1e12, max_value=1e12, allow_nan=False),
    st.sampled_from([np.inf, -np.inf, 0.0, 1.0, -1.0, 3.0, 5.0, -3.0]),
)
unit = st.floats(min_value=0.0, max_value=1.0)


@st.composite
def stencil_values(draw, width=3):
    """Uniform, wide-range and near-degenerate stencils."""
    kind = draw(st.sampled_from(["uniform", "heavy", "nearly-flat", "repeat"]))
    if kind == "uniform":
        return [draw(moderate) for _ in range(width)]
    if kind == "heavy":
        base = draw(moderate)
        return [base + draw(st.floats(-1.0, 1.0)) * 10.0 ** draw(st.integers(-12, 6)) for _ in range(width)]
    if kind == "nearly-flat":
        base = draw(moderate)
        return [base + draw(st.floats(-1e-9, 1e-9)) for _ in range(width)]
    vals = [draw(moderate) for _ in range(2)]
    return [vals[draw(st.integers(0, 1))] for _ in range(width)]
