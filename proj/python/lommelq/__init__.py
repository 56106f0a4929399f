"""Bessel, Lommel and Wright-zero evaluation with contour zero counting."""

from ._lommelq import (
    Error,
    EvalResult,
    bessel_j,
    bessel_y,
    classify,
    count_g,
    count_ghat,
    ghat_zeros,
    hankel,
    lommel_s,
    quantize,
    table1,
    wright_zero,
    zero_census,
)

__all__ = [
    "Error",
    "EvalResult",
    "bessel_j",
    "bessel_y",
    "classify",
    "count_g",
    "count_ghat",
    "ghat_zeros",
    "hankel",
    "lommel_s",
    "quantize",
    "table1",
    "wright_zero",
    "zero_census",
]
