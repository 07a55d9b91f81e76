"""Weighted Dedekind symbols, Hecke operators on them, and generalized tau functions.

All arithmetic is exact (``int`` and :class:`fractions.Fraction`).
"""

from .exact import (
    apostol_sum,
    bernoulli_number,
    bernoulli_poly,
    periodic_bernoulli,
    sigma,
)
from .hecke import (
    ELLS,
    EigenReport,
    eigen_family_n,
    eigenvalue,
    find_nonzero_point,
    hecke_apply,
    hecke_symbol,
    tau,
    tau_prime_closed_form,
    tau_ramanujan_elementary,
)
from .qseries import QSeries, qexp_delta, qexp_e4, qexp_e6, qexp_eigenform
from .symbols import (
    DedekindSymbol,
    HomogeneousPolynomial,
    SymbolPoint,
    e_family,
    e_symbol,
    eisenstein_symbol,
    f_symbol,
    g_symbol,
    i_sum,
    s_reciprocity_poly,
)

__version__ = "0.1.0"
