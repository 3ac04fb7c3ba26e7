"""Per-module view: highest weights, formal characters, multi-route dimensions.

A descriptor (p, g, c, eps) selects one member of the p-1 element family of
simple symplectic modules; the four closed-form highest-weight cases are
selected from (c, eps) alone:

    (0, 0)   -> I    : (d-1) omega_g
    (c>=1,0) -> II   : (d-c-1) omega_g + c omega_{g-1}
    (c>=1,1) -> III  : (d-c-1) omega_g + (c-1) omega_{g-1} + omega_{g-2}
    (0, 1)   -> IV   : (d-2) omega_g + omega_{g-3}

with omega_0 read as zero and any needed omega_i, i < 0, undefined (possible
only in ranks 1 and 2, where the corresponding modules are empty).

The formal character is the multiset {w(sigma)} over the small admissible
colorings.  Because the loop parameter b_i of a coloring is determined by
(a_i, n_i) via n_i = d-1-a_i-2b_i, the multiplicity of a weight n depends
only on (|n_1|, ..., |n_g|): it is the number of stick/trunk configurations
with a_i <= d-1-|n_i| and a_i = d-1-n_i (mod 2).  `character` exploits this
to build the multiset by a per-weight transfer-matrix count instead of
listing colorings one by one, which keeps ranks ~5 at p = 13 tractable;
equality with the enumeration-built multiset is pinned by tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import lollipop, verlinde, weyl
from .errors import (
    BadParameters,
    EmptyModule,
    NoSuchFormula,
    NoUniqueMaximum,
    WeightUndefined,
)
from .weights import (
    DominantWeight,
    ReducedWeight,
    Weight,
    alcove_pairing,
    dominance_leq,
    dominant_representative,
    epsilon_to_omega,
    omega_to_epsilon,
    orbit_size,
    reduce_weight,
    symmetric_lift,
)

DIM_METHODS = ("count", "formula", "polynomial")


def case_label(c: int, eps: int) -> str:
    """The case (I-IV) a pair (c, eps) belongs to."""
    if eps not in (0, 1) or c < 0:
        raise BadParameters(f"bad (c, eps) = ({c}, {eps})")
    if eps == 0:
        return "I" if c == 0 else "II"
    return "IV" if c == 0 else "III"


@dataclass(frozen=True)
class ModuleDescriptor:
    """Parameter quadruple selecting one module of the family."""

    p: int
    g: int
    c: int
    eps: int

    def __post_init__(self):
        lollipop.validate_parameters(self.p, self.g, self.c, self.eps)

    @property
    def d(self) -> int:
        return (self.p - 1) // 2

    @property
    def case(self) -> str:
        return case_label(self.c, self.eps)


@dataclass
class WeightMultiset:
    """Formal character: map from weight to positive multiplicity."""

    g: int
    entries: dict[Weight, int] = field(default_factory=dict)

    def mass(self) -> int:
        return sum(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        items = sorted(self.entries.items(), key=lambda kv: kv[0].coords)
        return {
            "g": self.g,
            "entries": [
                {"weight": list(w.coords), "mult": str(m)} for w, m in items
            ],
        }


@dataclass
class CheckRecord:
    check: str
    route_a: object
    route_b: object
    passed: bool

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "routeA": str(self.route_a),
            "routeB": str(self.route_b),
            "pass": self.passed,
        }


@dataclass
class ConsistencyReport:
    descriptor: ModuleDescriptor
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.records]


def highest_weight_closed(desc: ModuleDescriptor) -> DominantWeight:
    """Closed-form highest weight for the descriptor's case."""
    d, g, c = desc.d, desc.g, desc.c
    case = desc.case
    if case == "I":
        terms = [(g, d - 1)]
    elif case == "II":
        terms = [(g, d - c - 1), (g - 1, c)]
    elif case == "III":
        terms = [(g, d - c - 1), (g - 1, c - 1), (g - 2, 1)]
    else:
        terms = [(g, d - 2), (g - 3, 1)]
    coeffs = [0] * g
    for idx, coeff in terms:
        if idx >= 1:
            coeffs[idx - 1] += coeff
        elif idx < 0 and coeff > 0:
            # omega_0 is zero, but a negative index with nonzero coefficient
            # has no meaning at this rank (possible for g <= 2 only)
            raise WeightUndefined(
                f"case {case} needs omega_{idx} at rank {g} (p={desc.p})"
            )
    return DominantWeight(g, tuple(coeffs))


@lru_cache(maxsize=8)
def _character_tables(p: int, g: int, c: int):
    """Both eps-characters at (p, g, c) as {coords: multiplicity} dicts.

    Iterates over the d^g vectors M = (m_1..m_g), m_i = d-1-|n_i|, counting
    stick/trunk configurations with a_i in A(m_i) = {a <= m_i, a = m_i (2)}
    by a transfer-matrix chain; M lands in the eps = (c + sum m_i) mod 2
    character and expands to the 2^#{|n_i|>0} sign choices, all with the
    same multiplicity.
    """
    d = (p - 1) // 2
    out: tuple[dict, dict] = ({}, {})

    if g == 1:
        for m in range(d):
            if c <= m and (c - m) % 2 == 0:
                val = d - 1 - m
                eps = (c + m) % 2
                for n in {val, -val}:
                    out[eps][(n,)] = 1
        return out

    # trans[m][x][y] = #{a in A(m) : half-color triple (x, a, y) admissible}
    trans = []
    for m in range(d):
        rows = []
        for x in range(d):
            row = [0] * d
            for a in range(m % 2, m + 1, 2):
                lo = abs(x - a)
                hi = min(x + a, d - 1, 2 * d - 1 - x - a)
                for y in range(lo, hi + 1):
                    row[y] += 1
            rows.append(row)
        trans.append(rows)

    starts = []
    for m in range(d):
        v = [0] * d
        for a in range(m % 2, m + 1, 2):
            v[a] = 1
        starts.append(v)

    values = [d - 1 - m for m in range(d)]
    signs = [((values[m], -values[m]) if values[m] else (0,)) for m in range(d)]

    def expand(ms: tuple[int, ...], mult: int) -> None:
        eps = (c + sum(ms)) % 2
        bucket = out[eps]
        for coords in itertools.product(*(signs[m] for m in ms)):
            bucket[coords] = mult

    def descend(i: int, prefix: tuple[int, ...], v: list[int]) -> None:
        if i == g:
            for m in range(d):
                row = trans[m]
                mult = sum(v[x] * row[x][c] for x in range(d) if v[x])
                if mult:
                    expand(prefix + (m,), mult)
            return
        for m in range(d):
            row = trans[m]
            nxt = [0] * d
            for x in range(d):
                w = v[x]
                if not w:
                    continue
                rx = row[x]
                for y in range(d):
                    if rx[y]:
                        nxt[y] += w * rx[y]
            if any(nxt):
                descend(i + 1, prefix + (m,), nxt)

    for m in range(d):
        descend(2, (m,), list(starts[m]))
    return out


def character(desc: ModuleDescriptor) -> WeightMultiset:
    """Multiset of weights of the module, with multiplicities."""
    table = _character_tables(desc.p, desc.g, desc.c)[desc.eps]
    return WeightMultiset(
        desc.g, {Weight(desc.g, coords): mult for coords, mult in table.items()}
    )


def reduced_character(desc: ModuleDescriptor) -> dict[ReducedWeight, int]:
    """Image of the character under coordinatewise reduction modulo p-1."""
    modulus = desc.p - 1
    out: dict[ReducedWeight, int] = {}
    for w, mult in character(desc).entries.items():
        rw = reduce_weight(w, modulus)
        out[rw] = out.get(rw, 0) + mult
    return out


def highest_weight_from_character(m: WeightMultiset) -> DominantWeight:
    """The unique dominant member that dominance-dominates every member.

    Verified against the whole multiset; multiplicity of the maximum must
    be 1.
    """
    if not m.entries:
        raise EmptyModule("empty weight multiset has no highest weight")
    dominants = [w for w in m.entries if w.is_dominant()]
    tops = [
        w
        for w in dominants
        if all(dominance_leq(other, w) for other in dominants)
    ]
    if len(tops) != 1:
        raise NoUniqueMaximum(
            f"{len(tops)} dominance-maximal dominant weights among {len(dominants)}"
        )
    top = tops[0]
    for w in m.entries:
        if not dominance_leq(w, top):
            raise NoUniqueMaximum(f"{w.coords} is not below {top.coords}")
    if m.entries[top] != 1:
        raise NoUniqueMaximum(
            f"maximum {top.coords} has multiplicity {m.entries[top]}"
        )
    return epsilon_to_omega(top)


def dim(desc: ModuleDescriptor, method: str = "count") -> int:
    """Dimension by the chosen route: exact coloring count, trigonometric
    formula, or tabulated rank-2..4 polynomial."""
    if method == "count":
        return lollipop.count_colorings(desc.p, desc.g, desc.c, desc.eps)
    if method == "formula":
        return verlinde.dim_formula(desc.p, desc.g, desc.c, desc.eps)
    if method == "polynomial":
        return verlinde.appendix_b_eval(desc.g, desc.case, desc.p, desc.c)
    raise BadParameters(f"method must be one of {DIM_METHODS}, got {method!r}")


def _record(report: ConsistencyReport, name, a, b, ok=None) -> None:
    report.records.append(CheckRecord(name, a, b, (a == b) if ok is None else ok))


def consistency_report(desc: ModuleDescriptor) -> ConsistencyReport:
    """Run every cross-check that applies to this module and record results."""
    report = ConsistencyReport(desc)
    d = desc.d

    n_count = dim(desc, "count")
    n_formula = dim(desc, "formula")
    _record(report, "dim count=formula", n_count, n_formula)
    if desc.g in (2, 3, 4):
        try:
            _record(report, "dim count=polynomial", n_count, dim(desc, "polynomial"))
        except NoSuchFormula:
            _record(report, "dim count=polynomial", "no formula", "no formula")

    char = character(desc)
    _record(report, "character mass=dim", char.mass(), n_count)

    try:
        closed = highest_weight_closed(desc)
    except WeightUndefined:
        closed = None
    if char.entries:
        extracted = highest_weight_from_character(char)
        if closed is None:
            _record(report, "highest weight", "undefined", extracted, ok=False)
        else:
            _record(report, "highest weight", extracted, closed)
    else:
        _record(report, "highest weight", "EmptyModule", "EmptyModule",
                ok=(n_count == 0))

    orbits: dict[Weight, list[int]] = {}
    for w, mult in char.entries.items():
        orbits.setdefault(dominant_representative(w), []).append(mult)
    weyl_ok = all(
        len(set(ms)) == 1 and len(ms) == orbit_size(rep)
        for rep, ms in orbits.items()
    )
    _record(report, "Weyl invariance", weyl_ok, True)

    box_ok = all(
        max(abs(n) for n in w.coords) <= d - 1 for w in char.entries
    ) if char.entries else True
    _record(report, "weights in box", box_ok, True)

    reduced = reduced_character(desc)
    _record(report, "reduction injective", len(reduced), len(char.entries))
    _record(report, "reduction mass", sum(reduced.values()), char.mass())
    lifted_ok = all(
        char.entries.get(symmetric_lift(rw)) == mult for rw, mult in reduced.items()
    )
    _record(report, "symmetric lift reconstructs", lifted_ok, True)

    if closed is not None:
        if desc.g == 2:
            _record(report, "rank-2 Weyl agreement",
                    weyl.weyl_dim(2, closed), n_count)
        if desc.g == 3 and desc.eps == 0:
            _record(report, "rank-3 Jantzen agreement",
                    weyl.jantzen_rank3_dim(desc.p, desc.c), n_count)
        if desc.g >= 5:
            _record(report, "alcove pairing p+2g-4",
                    alcove_pairing(closed), desc.p + 2 * desc.g - 4)

    return report


def character_from_enumeration(desc: ModuleDescriptor) -> WeightMultiset:
    """Reference construction of the character by listing every coloring.

    Exponentially slower than `character`; used as its oracle in tests and
    available for small parameters.
    """
    entries: dict[Weight, int] = {}
    for sigma in lollipop.enumerate_colorings(desc.p, desc.g, desc.c, desc.eps):
        w = lollipop.weight_of(sigma)
        entries[w] = entries.get(w, 0) + 1
    return WeightMultiset(desc.g, entries)


def family_table(g: int, p: int) -> list[dict]:
    """One row per (c, eps) at fixed (p, g), in case order I, II, III, IV.

    Rows whose closed-form weight is undefined at this rank are skipped.
    """
    rows = []
    d = (p - 1) // 2
    pairs = [(0, 0)]
    pairs += [(c, 0) for c in range(1, d)]
    pairs += [(c, 1) for c in range(1, d)]
    pairs.append((0, 1))
    for c, eps in pairs:
        desc = ModuleDescriptor(p, g, c, eps)
        try:
            lam = highest_weight_closed(desc)
        except WeightUndefined:
            continue
        rows.append({
            "p": p,
            "c": c,
            "eps": eps,
            "case": desc.case,
            "lambda_omega": list(lam.omega_coeffs),
            "lambda_epsilon": list(omega_to_epsilon(lam).coords),
            "dim": dim(desc, "count"),
            "alcove_pairing": alcove_pairing(lam),
        })
    return rows
