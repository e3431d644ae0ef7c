"""Exact U-deformations and q-deformations of positive rationals."""

import json

from ._core import (
    DegenerateMatrixError,
    StabilizationError,
    TermsExhaustedError,
    cf_expand,
    codenominator,
    constant_series,
    ell,
    f_pair,
    j_quotient,
    q_constant_series,
    q_deform,
    q_series,
    quantize,
    series,
)
from ._core import check as _check

__all__ = [
    "DegenerateMatrixError",
    "StabilizationError",
    "TermsExhaustedError",
    "cf_expand",
    "check",
    "codenominator",
    "constant_series",
    "ell",
    "f_pair",
    "j_quotient",
    "q_constant_series",
    "q_deform",
    "q_series",
    "quantize",
    "series",
]


def check(prop, u=("p", 1, 1, 0), max_ell=10, order=10, jobs=1):
    """Run a property sweep and return the report as a dict."""
    return json.loads(_check(prop, u, max_ell, order, jobs))
