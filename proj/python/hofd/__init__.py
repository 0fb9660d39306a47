"""Heckman-Opdam hypergeometric functions of type A with degenerate parameter."""

from ._core import (
    HofdError,
    F_connection,
    F_degenerate,
    F_degenerate_connection,
    appell_f1,
    c_func,
    degenerate_lambda,
    fd_series,
    gauss_2f1,
    horn_g2,
    jack_polynomial,
    phi,
    rho,
    suite_names,
    theorem31_check,
    verify,
)

__all__ = [
    "HofdError",
    "F_connection",
    "F_degenerate",
    "F_degenerate_connection",
    "appell_f1",
    "c_func",
    "degenerate_lambda",
    "fd_series",
    "gauss_2f1",
    "horn_g2",
    "jack_polynomial",
    "phi",
    "rho",
    "suite_names",
    "theorem31_check",
    "verify",
]
