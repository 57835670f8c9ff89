"""Exact representation zeta functions of the group schemes F_{n,delta}, G_n and H_n."""

from .qalg import Poly, RatFun, SubsetIndex, parse, rat_equal, render, substitute
from .schemes import F, G, H, GroupScheme, local_zeta_additive, local_zeta_multiplicative

__all__ = [
    "Poly", "RatFun", "SubsetIndex", "parse", "rat_equal", "render", "substitute",
    "F", "G", "H", "GroupScheme", "local_zeta_additive", "local_zeta_multiplicative",
]
__version__ = "0.1.0"
