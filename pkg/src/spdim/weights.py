"""Rank-g type-C weight lattice: bases, dominance order, Weyl action, pairings.

Weights are stored in the standard epsilon-basis (coordinates n_1..n_g), the
canonical internal form.  The fundamental-weight basis (omega_i = e_1+...+e_i,
coefficients eta_1..eta_g) is a view on dominant weights.  The Weyl group acts
by signed coordinate permutations; the simple roots are
alpha_i = e_i - e_{i+1} (i < g) and alpha_g = 2 e_g.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BadParameters, NotDominant, RankMismatch


@dataclass(frozen=True)
class Weight:
    """Integer vector in the epsilon-basis of the rank-g weight lattice."""

    g: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.g < 1:
            raise BadParameters(f"rank must be >= 1, got {self.g}")
        object.__setattr__(self, "coords", tuple(int(n) for n in self.coords))
        if len(self.coords) != self.g:
            raise BadParameters(
                f"expected {self.g} coordinates, got {len(self.coords)}"
            )

    def is_dominant(self) -> bool:
        c = self.coords
        return c[-1] >= 0 and all(c[i] >= c[i + 1] for i in range(self.g - 1))

    def to_json(self) -> dict:
        return {"g": self.g, "basis": "epsilon", "coords": list(self.coords)}


@dataclass(frozen=True)
class DominantWeight:
    """Nonnegative coefficients eta_1..eta_g in the fundamental-weight basis."""

    g: int
    omega_coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.g < 1:
            raise BadParameters(f"rank must be >= 1, got {self.g}")
        object.__setattr__(
            self, "omega_coeffs", tuple(int(n) for n in self.omega_coeffs)
        )
        if len(self.omega_coeffs) != self.g:
            raise BadParameters(
                f"expected {self.g} coefficients, got {len(self.omega_coeffs)}"
            )
        if any(n < 0 for n in self.omega_coeffs):
            raise BadParameters(f"omega-coefficients must be >= 0: {self.omega_coeffs}")

    def to_json(self) -> dict:
        return {"g": self.g, "basis": "omega", "coords": list(self.omega_coeffs)}


@dataclass(frozen=True)
class ReducedWeight:
    """Coordinatewise residues of a weight modulo a fixed modulus (= p-1 = 2d)."""

    g: int
    modulus: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise BadParameters(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "coords", tuple(int(n) for n in self.coords))
        if len(self.coords) != self.g:
            raise BadParameters(
                f"expected {self.g} coordinates, got {len(self.coords)}"
            )
        if any(not 0 <= n < self.modulus for n in self.coords):
            raise BadParameters(
                f"residues must lie in [0, {self.modulus}): {self.coords}"
            )


def omega_to_epsilon(dw: DominantWeight) -> Weight:
    """Change of basis omega -> epsilon: n_i = eta_i + eta_{i+1} + ... + eta_g."""
    tail = 0
    coords = [0] * dw.g
    for i in range(dw.g - 1, -1, -1):
        tail += dw.omega_coeffs[i]
        coords[i] = tail
    return Weight(dw.g, tuple(coords))


def epsilon_to_omega(w: Weight) -> DominantWeight:
    """Inverse change of basis; requires weakly decreasing nonnegative coords."""
    if not w.is_dominant():
        raise NotDominant(f"{w.coords} is not weakly decreasing nonnegative")
    n = w.coords
    coeffs = tuple(n[i] - n[i + 1] for i in range(w.g - 1)) + (n[-1],)
    return DominantWeight(w.g, coeffs)


def dominance_leq(lhs: Weight, rhs: Weight) -> bool:
    """True iff rhs - lhs is a nonnegative integer combination of simple roots.

    With m = rhs - lhs and partial sums s_k, the combination coefficients are
    c_k = s_k (k < g) and c_g = s_g / 2, so the criterion is s_k >= 0 for all k
    and s_g even.
    """
    if lhs.g != rhs.g:
        raise RankMismatch(f"ranks differ: {lhs.g} vs {rhs.g}")
    s = 0
    for a, b in zip(lhs.coords, rhs.coords):
        s += b - a
        if s < 0:
            return False
    return s % 2 == 0


def dominant_representative(w: Weight) -> Weight:
    """The unique dominant weight in the signed-permutation orbit of w."""
    return Weight(w.g, tuple(sorted((abs(n) for n in w.coords), reverse=True)))


def weyl_orbit(w: Weight) -> list[Weight]:
    """All signed permutations of w, without repeats.  Small ranks only."""
    seen = set()
    for perm in itertools.permutations(w.coords):
        signs = [(n,) if n == 0 else (n, -n) for n in perm]
        for choice in itertools.product(*signs):
            seen.add(choice)
    return [Weight(w.g, c) for c in sorted(seen)]


def orbit_size(w: Weight) -> int:
    """Size of the signed-permutation orbit, computed combinatorially."""
    counts: dict[int, int] = {}
    nonzero = 0
    for n in w.coords:
        a = abs(n)
        counts[a] = counts.get(a, 0) + 1
        if a:
            nonzero += 1
    size = 2**nonzero
    num = 1
    for k in range(2, w.g + 1):
        num *= k
    for mult in counts.values():
        for k in range(2, mult + 1):
            num //= k
    return size * num


def rho(g: int) -> DominantWeight:
    """Sum of the fundamental weights; epsilon-form (g, g-1, ..., 1)."""
    if g < 1:
        raise BadParameters(f"rank must be >= 1, got {g}")
    return DominantWeight(g, (1,) * g)


def alcove_pairing(lam: DominantWeight) -> int:
    """<lam + rho, beta_check> for beta_check = a_1_check + 2 a_2_check + ... + 2 a_g_check.

    Since <omega_i, alpha_j_check> = delta_ij this is
    (eta_1 + 1) + 2 * sum_{i>=2} (eta_i + 1).
    """
    eta = lam.omega_coeffs
    return (eta[0] + 1) + 2 * sum(n + 1 for n in eta[1:])


def reduce_weight(w: Weight, modulus: int) -> ReducedWeight:
    """Coordinatewise residues in [0, modulus)."""
    if modulus < 1:
        raise BadParameters(f"modulus must be >= 1, got {modulus}")
    return ReducedWeight(w.g, modulus, tuple(n % modulus for n in w.coords))


def symmetric_lift(rw: ReducedWeight) -> Weight:
    """Lift residues to the symmetric window [-ceil(m/2), ceil(m/2) - 1]."""
    half = (rw.modulus + 1) // 2
    return Weight(rw.g, tuple(n if n < half else n - rw.modulus for n in rw.coords))


def weight_from_json(obj: dict) -> Weight | DominantWeight:
    """Parse {"g", "basis", "coords"} produced by to_json."""
    basis = obj.get("basis", "epsilon")
    if basis == "epsilon":
        return Weight(obj["g"], tuple(obj["coords"]))
    if basis == "omega":
        return DominantWeight(obj["g"], tuple(obj["coords"]))
    raise BadParameters(f"unknown basis {basis!r}")
