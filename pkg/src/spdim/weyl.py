"""Characteristic-zero comparison route: type-C Weyl dimensions.

For a dominant weight lam of Sp(2g) put l = epsilon-form of lam + rho and
r = epsilon-form of rho = (g, g-1, ..., 1).  The Weyl dimension formula reads

    dim = prod_{i<j} (l_i^2 - l_j^2)/(r_i^2 - r_j^2) * prod_i l_i/r_i ,

accumulated here as a single exact rational (intermediate quotients need not
be integral).  `jantzen_rank3_dim` is the rank-3 consequence of the Jantzen
Sum Formula for the eps = 0 family: the simple module equals the Weyl module
for c in {0, 1}, and for c >= 2 its dimension is the difference of the Weyl
dimensions at lam and lam - 2*omega_2.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonIntegralResult, NotDominant
from .lollipop import validate_parameters
from .weights import DominantWeight, Weight, omega_to_epsilon, rho


def weyl_dim(g: int, lam: DominantWeight | Weight) -> int:
    """Dimension of the characteristic-zero simple Sp(2g)-module with highest
    weight lam, by the Weyl dimension formula in exact rational arithmetic."""
    if isinstance(lam, Weight):
        if not lam.is_dominant():
            raise NotDominant(f"{lam.coords} is not dominant")
        shifted = [n + r for n, r in zip(lam.coords, range(g, 0, -1))]
    else:
        if lam.g != g:
            raise NotDominant(f"weight has rank {lam.g}, expected {g}")
        lam_eps = omega_to_epsilon(lam)
        shifted = [n + r for n, r in zip(lam_eps.coords, range(g, 0, -1))]
    base = omega_to_epsilon(rho(g)).coords

    num = 1
    den = 1
    for i in range(g):
        num *= shifted[i]
        den *= base[i]
        for j in range(i + 1, g):
            num *= shifted[i] ** 2 - shifted[j] ** 2
            den *= base[i] ** 2 - base[j] ** 2
    value = Fraction(num, den)
    if value.denominator != 1 or value <= 0:
        raise NonIntegralResult(f"Weyl dimension came out {value} for {lam}")
    return int(value)


def jantzen_rank3_dim(p: int, c: int) -> int:
    """dim of the rank-3, eps = 0 family member at (p, c) via Weyl modules.

    lam = c*omega_2 + (d-1-c)*omega_3.  Plain Weyl dimension for c in {0, 1};
    for c >= 2 subtract the Weyl dimension at mu = lam - 2*omega_2.
    """
    d = validate_parameters(p, 3, c)
    lam = DominantWeight(3, (0, c, d - 1 - c))
    if c <= 1:
        return weyl_dim(3, lam)
    mu = DominantWeight(3, (0, c - 2, d - 1 - c))
    return weyl_dim(3, lam) - weyl_dim(3, mu)
