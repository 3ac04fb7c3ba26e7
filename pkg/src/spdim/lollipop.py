"""Small admissible p-colorings of the genus-g lollipop tree.

The lollipop tree G_g is a caterpillar graph: g "lollipops" (a loop edge plus
its stick edge) hang off a trunk that ends in a univalent vertex whose edge is
colored 2c.  The 2-valent corner where the first stick bends into the trunk is
ignored, so the first stick and the leftmost trunk segment are a single edge;
G_g therefore has 2g-1 trivalent vertices and 3g-1 edges.

A p-color is an integer in {0, ..., p-2}.  A coloring is admissible if the
three colors i, j, k at every trivalent vertex satisfy

    i + j + k even,   |i - j| <= k <= i + j,   i + j + k <= 2p - 4.

Admissibility at the loop vertex forces stick i to carry an even color 2*a_i
and loop i to carry a_i + b_i with b_i >= 0.  A coloring is small if
a_i + b_i <= d - 1 where d = (p-1)/2, and of type (c, eps) if the boundary
edge is colored 2c and c + sum(a_i) = eps (mod 2).  Its weight is the vector
with coordinates n_i = d - 1 - a_i - 2*b_i.

`enumerate_colorings` and `count_colorings` are independent implementations
(depth-first search vs. transfer matrix along the trunk) and serve as mutual
oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2

from .errors import BadParameters
from .weights import Weight

EdgeId = tuple[str, int]

BOUNDARY: EdgeId = ("boundary", 0)


def validate_parameters(p: int, g: int, c: int, eps: int | None = None) -> int:
    """Check (p, g, c[, eps]) and return d = (p-1)/2."""
    if p < 5 or p % 2 == 0 or not gmpy2.is_prime(p):
        raise BadParameters(f"p must be an odd prime >= 5, got {p}")
    if g < 1:
        raise BadParameters(f"g must be >= 1, got {g}")
    d = (p - 1) // 2
    if not 0 <= c <= d - 1:
        raise BadParameters(f"c must lie in [0, {d - 1}] for p={p}, got {c}")
    if eps is not None and eps not in (0, 1):
        raise BadParameters(f"eps must be 0 or 1, got {eps}")
    return d


@dataclass(frozen=True)
class LollipopColoring:
    """One assignment (a_1..a_g, b_1..b_g, t_1..t_{g-2}) of coloring parameters.

    Stick i is colored 2*a_i, loop i is colored a_i + b_i, and t_j is the
    (even) color of the j-th trunk edge, left to right.  The boundary edge is
    colored 2c; for g = 1 the single stick *is* the boundary edge.
    """

    p: int
    g: int
    c: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        validate_parameters(self.p, self.g, self.c)
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "t", tuple(int(x) for x in self.t))
        if len(self.a) != self.g or len(self.b) != self.g:
            raise BadParameters(
                f"need {self.g} stick and loop parameters, got "
                f"{len(self.a)} and {len(self.b)}"
            )
        if len(self.t) != max(self.g - 2, 0):
            raise BadParameters(
                f"need {max(self.g - 2, 0)} trunk colors, got {len(self.t)}"
            )
        if any(x < 0 for x in self.a + self.b + self.t):
            raise BadParameters("coloring parameters must be nonnegative")

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "g": self.g,
            "c": self.c,
            "a": list(self.a),
            "b": list(self.b),
            "t": list(self.t),
        }


@dataclass(frozen=True)
class TrunkLayout:
    """Incidence structure of G_g: one edge-id triple per trivalent vertex."""

    g: int
    triples: tuple[tuple[EdgeId, EdgeId, EdgeId], ...]

    @property
    def boundary_edge(self) -> EdgeId:
        return ("stick", 1) if self.g == 1 else BOUNDARY

    def edges(self) -> set[EdgeId]:
        found = {e for tri in self.triples for e in tri}
        found.add(self.boundary_edge)
        return found


def vertex_triples(g: int) -> list[tuple[EdgeId, EdgeId, EdgeId]]:
    """Edge-id triples at the 2g-1 trivalent vertices of G_g.

    Loop vertex i sees (loop_i, loop_i, stick_i).  Attachment vertex j
    (1 <= j <= g-1) sees (u_{j-1}, stick_{j+1}, u_j) where u_0 = stick_1
    (corner merge), u_j = trunk_j for j <= g-2, and u_{g-1} is the boundary
    edge.  For g = 1 the single stick is the boundary edge itself.
    """
    if g < 1:
        raise BadParameters(f"g must be >= 1, got {g}")
    triples: list[tuple[EdgeId, EdgeId, EdgeId]] = []
    for i in range(1, g + 1):
        triples.append((("loop", i), ("loop", i), ("stick", i)))
    for j in range(1, g):
        left: EdgeId = ("stick", 1) if j == 1 else ("trunk", j - 1)
        right: EdgeId = BOUNDARY if j == g - 1 else ("trunk", j)
        triples.append((left, ("stick", j + 1), right))
    return triples


def trunk_layout(g: int) -> TrunkLayout:
    return TrunkLayout(g, tuple(vertex_triples(g)))


def edge_color(sigma: LollipopColoring, edge: EdgeId) -> int:
    kind, i = edge
    if kind == "loop":
        return sigma.a[i - 1] + sigma.b[i - 1]
    if kind == "stick":
        return 2 * sigma.a[i - 1]
    if kind == "trunk":
        return sigma.t[i - 1]
    if kind == "boundary":
        return 2 * sigma.c
    raise BadParameters(f"unknown edge id {edge!r}")


def _admissible(i: int, j: int, k: int, p: int) -> list[str]:
    bad = []
    if (i + j + k) % 2 != 0:
        bad.append("parity")
    if not abs(i - j) <= k <= i + j:
        bad.append("triangle")
    if i + j + k > 2 * p - 4:
        bad.append("sum")
    return bad


def validate(sigma: LollipopColoring) -> list[str]:
    """Return all violated coloring constraints; an empty list means valid."""
    p, g, d = sigma.p, sigma.g, (sigma.p - 1) // 2
    violations = []
    layout = trunk_layout(g)
    for edge in sorted(layout.edges()):
        color = edge_color(sigma, edge)
        if not 0 <= color <= p - 2:
            violations.append(
                f"color-range: edge {edge[0]}{edge[1] or ''} has color "
                f"{color} outside [0, {p - 2}]"
            )
    for v, tri in enumerate(layout.triples, start=1):
        colors = tuple(edge_color(sigma, e) for e in tri)
        for kind in _admissible(*colors, p):
            violations.append(f"{kind}: vertex {v} carries colors {colors}")
    for i in range(g):
        if sigma.a[i] + sigma.b[i] > d - 1:
            violations.append(
                f"smallness: lollipop {i + 1} has a+b = "
                f"{sigma.a[i] + sigma.b[i]} > {d - 1}"
            )
    if g == 1 and sigma.a[0] != sigma.c:
        violations.append(
            f"boundary: stick color {2 * sigma.a[0]} differs from 2c = {2 * sigma.c}"
        )
    return violations


def type_of(sigma: LollipopColoring) -> tuple[int, int]:
    """(c, eps) with eps = (c + sum a_i) mod 2."""
    return sigma.c, (sigma.c + sum(sigma.a)) % 2


def weight_of(sigma: LollipopColoring) -> Weight:
    """Weight vector with coordinates n_i = d - 1 - a_i - 2*b_i."""
    d = (sigma.p - 1) // 2
    return Weight(
        sigma.g, tuple(d - 1 - a - 2 * b for a, b in zip(sigma.a, sigma.b))
    )


def _trunk_ok(x: int, a: int, y: int, d: int) -> bool:
    # attachment-vertex admissibility for half-colors (2x, 2a, 2y)
    return abs(x - a) <= y <= x + a and x + a + y <= 2 * d - 1 and y <= d - 1


def enumerate_colorings(p: int, g: int, c: int, eps: int) -> list[LollipopColoring]:
    """All small admissible p-colorings of type (c, eps), lexicographically
    ordered on (a_1, b_1, ..., a_g, b_g, t_1, ...)."""
    d = validate_parameters(p, g, c, eps)
    if g == 1:
        # the stick is the boundary edge, so a_1 = c and eps is forced to 0
        if eps != 0:
            return []
        return [
            LollipopColoring(p, 1, c, (c,), (b1,), ()) for b1 in range(d - c)
        ]

    found: list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]] = []
    a = [0] * g
    b = [0] * g
    t = [0] * (g - 2)

    def descend(i: int, x: int, parity: int) -> None:
        # x = half-color of the trunk edge entering attachment vertex i-1
        if i == g:
            for ag in range(d):
                if (parity + ag + c) % 2 != eps:
                    continue
                if not _trunk_ok(x, ag, c, d):
                    continue
                a[g - 1] = ag
                for bg in range(d - ag):
                    b[g - 1] = bg
                    found.append((tuple(a), tuple(b), tuple(t)))
            return
        for ai in range(d):
            lo = abs(x - ai)
            hi = min(x + ai, d - 1, 2 * d - 1 - x - ai)
            if lo > hi:
                continue
            a[i - 1] = ai
            for bi in range(d - ai):
                b[i - 1] = bi
                for y in range(lo, hi + 1):
                    t[i - 2] = 2 * y
                    descend(i + 1, y, parity + ai)

    for a1 in range(d):
        a[0] = a1
        for b1 in range(d - a1):
            b[0] = b1
            descend(2, a1, a1)

    def lex_key(rec):
        ta, tb, tt = rec
        key = []
        for ai, bi in zip(ta, tb):
            key.append(ai)
            key.append(bi)
        key.extend(tt)
        return tuple(key)

    found.sort(key=lex_key)
    return [LollipopColoring(p, g, c, ta, tb, tt) for ta, tb, tt in found]


def count_colorings(p: int, g: int, c: int, eps: int) -> int:
    """|C_p(g, c, eps)| by a transfer-matrix sweep along the trunk.

    State: (trunk half-color x, parity of the a_i chosen so far).  Appending
    a lollipop with stick half-color a contributes a factor d - a, the number
    of legal loop parameters b under smallness.  Exact integers throughout.
    """
    d = validate_parameters(p, g, c, eps)
    if g == 1:
        return d - c if eps == 0 else 0

    state = [[0, 0] for _ in range(d)]
    for a1 in range(d):
        state[a1][a1 % 2] = d - a1

    for _ in range(2, g):
        new = [[0, 0] for _ in range(d)]
        for x in range(d):
            for par in (0, 1):
                w = state[x][par]
                if not w:
                    continue
                for ai in range(d):
                    lo = abs(x - ai)
                    hi = min(x + ai, d - 1, 2 * d - 1 - x - ai)
                    if lo > hi:
                        continue
                    wa = w * (d - ai)
                    flipped = (par + ai) % 2
                    for y in range(lo, hi + 1):
                        new[y][flipped] += wa
        state = new

    want = (c + eps) % 2
    total = 0
    for x in range(d):
        for par in (0, 1):
            w = state[x][par]
            if not w:
                continue
            for ag in range(d):
                if (par + ag) % 2 != want:
                    continue
                if _trunk_ok(x, ag, c, d):
                    total += w * (d - ag)
    return total


def csv_header(g: int) -> list[str]:
    cols = [f"a_{i}" for i in range(1, g + 1)]
    cols += [f"b_{i}" for i in range(1, g + 1)]
    cols += [f"t_{j}" for j in range(1, max(g - 2, 0) + 1)]
    cols.append("eps")
    cols += [f"n_{i}" for i in range(1, g + 1)]
    return cols


def csv_row(sigma: LollipopColoring) -> list[int]:
    _, eps = type_of(sigma)
    return (
        list(sigma.a)
        + list(sigma.b)
        + list(sigma.t)
        + [eps]
        + list(weight_of(sigma).coords)
    )
