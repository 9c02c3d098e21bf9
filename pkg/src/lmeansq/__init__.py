"""Mean squares of Dirichlet L-functions at 3 and 4, checked against
independent numeric oracles."""

__version__ = "0.1.0"

from .characters import DirichletCharacter, characters, parity
from .lfunc import (
    general_finite_form,
    l3_closed,
    l4_closed,
    l_series,
    mean_square_brute,
    mean_square_closed,
    mean_value,
)
from .multiplicative import euler_phi, jordan_totient

__all__ = [
    "DirichletCharacter",
    "characters",
    "parity",
    "general_finite_form",
    "l3_closed",
    "l4_closed",
    "l_series",
    "mean_square_brute",
    "mean_square_closed",
    "mean_value",
    "euler_phi",
    "jordan_totient",
]
