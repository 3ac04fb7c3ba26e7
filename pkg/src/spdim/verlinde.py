"""Trigonometric dimension sums, their polynomial forms, and exact fits.

The two sums, for p an odd prime >= 5, d = (p-1)/2, rank g and boundary
half-color c, are

    D_g^{(2c)}(p)     = (p/4)^(g-1) * sum_{j=1}^{d} sin(pi j (2c+1)/p)
                                                  * sin(pi j/p)^(1-2g)
    delta_g^{(2c)}(p) = (-1)^c (4^(1-g)/p) * sum_{j=1}^{d} sin(pi j (2c+1)/p)
                                           * sin(pi j/p) * cos(pi j/p)^(-2g)

Both are integers; the module dimension is (D + (-1)^eps * delta)/2.  The
sums are evaluated in arbitrary-precision binary floating point (gmpy2/MPFR)
and rounded with a certified residual check.  Exact transfer-matrix counts
are the ground truth; the trigonometric path is the thing being verified.

The closed-form dimension polynomials in p for ranks 2-4 are tabulated here
with exact rational coefficients, and `interpolate_dim` recovers them from
counts at sample primes by exact Lagrange/Newton interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2

from .errors import (
    BadParameters,
    InsufficientPoints,
    NonIntegralResult,
    NoSuchFormula,
    ParityViolation,
    PrecisionExhausted,
)
from .lollipop import count_colorings, validate_parameters

DEFAULT_RESIDUAL_BOUND = Fraction(1, 2**32)


@dataclass(frozen=True)
class TrigEvalConfig:
    """Working precision (bits) and maximum allowed distance to an integer."""

    precision_bits: int
    residual_bound: Fraction = DEFAULT_RESIDUAL_BOUND

    def __post_init__(self):
        if self.precision_bits < 2:
            raise BadParameters(
                f"precision_bits must be >= 2, got {self.precision_bits}"
            )
        bound = Fraction(self.residual_bound)
        object.__setattr__(self, "residual_bound", bound)
        if not 0 < bound <= Fraction(1, 4):
            raise BadParameters(f"residual_bound must lie in (0, 1/4], got {bound}")


def default_config(p: int, g: int) -> TrigEvalConfig:
    # sin(pi j/p)^(1-2g) can reach ~(p/pi)^(2g-1); the margin keeps the
    # rounding certificate safe without exact cyclotomic arithmetic
    return TrigEvalConfig(128 + (2 * g + 4) * (p - 1).bit_length())


def _certified_sum(p: int, g: int, c: int, cfg: TrigEvalConfig, kind: str) -> int:
    d = (p - 1) // 2
    with gmpy2.context(precision=cfg.precision_bits):
        pi = gmpy2.const_pi()
        total = gmpy2.mpfr(0)
        for j in range(1, d + 1):
            # sin(pi k/p) depends on k mod 2p only; reduce for conditioning
            k = (j * (2 * c + 1)) % (2 * p)
            s_num = gmpy2.sin(pi * k / p)
            s_j = gmpy2.sin(pi * j / p)
            if kind == "D":
                total += s_num * s_j ** (1 - 2 * g)
            else:
                total += s_num * s_j * gmpy2.cos(pi * j / p) ** (-2 * g)
        if kind == "D":
            total *= (gmpy2.mpfr(p) / 4) ** (g - 1)
        else:
            total *= gmpy2.mpfr(4) ** (1 - g) / p
            if c % 2:
                total = -total
        nearest = gmpy2.rint(total)
        residual = abs(total - nearest)
        # a residual only certifies anything if the representable spacing at
        # this magnitude is finer than the bound; otherwise it is vacuously 0
        if gmpy2.is_zero(total):
            spacing = Fraction(0)
        else:
            k = cfg.precision_bits - gmpy2.get_exp(total)
            spacing = Fraction(1, 2**k) if k >= 0 else Fraction(2 ** (-k))
        if spacing >= cfg.residual_bound:
            raise PrecisionExhausted(
                f"{kind}({p},{g},{c}) at {cfg.precision_bits} bits: value "
                f"spacing {float(spacing):.3e} cannot certify residual bound "
                f"{float(cfg.residual_bound):.3e}"
            )
        bound = gmpy2.mpfr(cfg.residual_bound.numerator) / gmpy2.mpfr(
            cfg.residual_bound.denominator
        )
        if not residual < bound:
            raise PrecisionExhausted(
                f"{kind}({p},{g},{c}) at {cfg.precision_bits} bits: residual "
                f"{float(residual):.3e} >= bound {float(bound):.3e}"
            )
        return int(nearest)


def _evaluate(p: int, g: int, c: int, cfg: TrigEvalConfig | None, kind: str) -> int:
    validate_parameters(p, g, c)
    if cfg is not None:
        return _certified_sum(p, g, c, cfg, kind)
    base = default_config(p, g)
    last: PrecisionExhausted | None = None
    for scale in (1, 2, 4):
        attempt = TrigEvalConfig(base.precision_bits * scale, base.residual_bound)
        try:
            return _certified_sum(p, g, c, attempt, kind)
        except PrecisionExhausted as exc:
            last = exc
    raise last


def verlinde_D(p: int, g: int, c: int, cfg: TrigEvalConfig | None = None) -> int:
    """The sine sum D_g^{(2c)}(p), certified-rounded to an integer.

    With an explicit cfg a single evaluation is attempted; otherwise the
    default precision is used and doubled up to 4x on residual failure.
    """
    return _evaluate(p, g, c, cfg, "D")


def verlinde_delta(p: int, g: int, c: int, cfg: TrigEvalConfig | None = None) -> int:
    """The companion sum delta_g^{(2c)}(p), where the inverse sines of
    D_g^{(2c)} become inverse cosines.  Retry policy as in verlinde_D."""
    return _evaluate(p, g, c, cfg, "delta")


def dim_formula(
    p: int, g: int, c: int, eps: int, cfg: TrigEvalConfig | None = None
) -> int:
    """(D + (-1)^eps * delta) / 2, asserting the half is integral."""
    validate_parameters(p, g, c, eps)
    big_d = verlinde_D(p, g, c, cfg)
    delta = verlinde_delta(p, g, c, cfg)
    signed = big_d + delta if eps == 0 else big_d - delta
    if signed % 2:
        raise ParityViolation(
            f"D + (-1)^eps*delta = {signed} is odd at (p,g,c,eps)=({p},{g},{c},{eps})"
        )
    return signed // 2


@dataclass(frozen=True)
class RationalPolynomial:
    """Univariate polynomial with exact rational coefficients, ascending degree."""

    var: str
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [Fraction(x) for x in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def evaluate(self, x) -> Fraction:
        acc = Fraction(0)
        for coeff in reversed(self.coeffs):
            acc = acc * x + coeff
        return acc

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [Fraction(0)] * n
        for i, x in enumerate(self.coeffs):
            cs[i] += x
        for i, x in enumerate(other.coeffs):
            cs[i] += x
        return RationalPolynomial(self.var, tuple(cs))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            if not self.coeffs or not other.coeffs:
                return RationalPolynomial(self.var, ())
            cs = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, x in enumerate(self.coeffs):
                for j, y in enumerate(other.coeffs):
                    cs[i + j] += x * y
            return RationalPolynomial(self.var, tuple(cs))
        scalar = Fraction(other)
        return RationalPolynomial(self.var, tuple(scalar * x for x in self.coeffs))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "var": self.var,
            "coeffs": [[str(x.numerator), str(x.denominator)] for x in self.coeffs],
        }

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for deg in range(len(self.coeffs) - 1, -1, -1):
            coeff = self.coeffs[deg]
            if coeff == 0:
                continue
            mono = "" if deg == 0 else (self.var if deg == 1 else f"{self.var}^{deg}")
            if coeff == 1 and mono:
                parts.append(mono)
            elif coeff == -1 and mono:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}" if mono else str(coeff))
        return " + ".join(parts).replace("+ -", "- ")


def polynomial_from_json(obj: dict) -> RationalPolynomial:
    coeffs = tuple(Fraction(int(num), int(den)) for num, den in obj["coeffs"])
    return RationalPolynomial(obj["var"], coeffs)


def _poly(*ascending) -> RationalPolynomial:
    return RationalPolynomial("p", tuple(Fraction(x) for x in ascending))


def _by_degree(pairs: list[tuple[int, int]]) -> RationalPolynomial:
    top = max(deg for deg, _ in pairs)
    cs = [Fraction(0)] * (top + 1)
    for deg, coeff in pairs:
        cs[deg] += coeff
    return RationalPolynomial("p", tuple(cs))


_X = _poly(0, 1)

APPENDIX_B_CASES = {2: ("I", "II", "III"), 3: ("I", "II", "III", "IV"), 4: ("I", "II", "III", "IV")}


def appendix_b_polynomial(g: int, case: str, c: int = 0) -> RationalPolynomial:
    """Tabulated dimension polynomial in p for rank g, as an exact univariate
    polynomial with the stick parameter c substituted in.

    Cases I and IV require c = 0; cases II and III require c >= 1 (and the
    evaluation prime must then satisfy c <= d-1).
    """
    if g not in APPENDIX_B_CASES or case not in APPENDIX_B_CASES[g]:
        raise NoSuchFormula(f"no tabulated polynomial for rank {g} case {case}")
    if case in ("I", "IV"):
        if c != 0:
            raise BadParameters(f"case {case} fixes c = 0, got {c}")
    elif c < 1:
        raise BadParameters(f"case {case} needs c >= 1, got {c}")

    if g == 2:
        if case == "I":
            return Fraction(1, 24) * _poly(-1, 1) * _X * _poly(1, 1)
        if case == "II":
            return (
                Fraction(c + 1, 24)
                * _poly(1, 1)
                * _poly(-2 * c - 1, 1)
                * _poly(-c, 1)
            )
        return (
            Fraction(c, 24) * _poly(-1, 1) * _poly(-2 * c - 1, 1) * _poly(-c - 1, 1)
        )

    if g == 3:
        if case == "I":
            return (
                Fraction(1, 2880)
                * _poly(-1, 1) * _X * _poly(1, 1) * _poly(1, 1)
                * _poly(2, 1) * _poly(3, 1)
            )
        if case == "II":
            inner = _by_degree([
                (5, 2 * c + 1),
                (4, 4 * c**2 + 4 * c + 7),
                (3, -12 * c**3 - 18 * c**2 + 28 * c + 17),
                (2, 6 * c**4 + 12 * c**3 - 22 * c**2 - 28 * c + 17),
                (1, 6 * (-2 * c**3 - 3 * c**2 + c + 1)),
                (0, 6 * c * (c**3 + 2 * c**2 - c - 2)),
            ])
            return Fraction(1, 2880) * _poly(-2 * c - 1, 1) * inner
        if case == "III":
            inner = _by_degree([
                (3, 2 * c + 1),
                (2, 4 * c**2 + 4 * c - 5),
                (1, 6 * (-2 * c**3 - 3 * c**2 + c + 1)),
                (0, 6 * c * (c**3 + 2 * c**2 - c - 2)),
            ])
            return (
                Fraction(1, 2880)
                * _poly(-1, 1) * _poly(1, 1) * _poly(-2 * c - 1, 1) * inner
            )
        return (
            Fraction(1, 2880)
            * _poly(-3, 1) * _poly(-2, 1) * _poly(-1, 1) * _poly(-1, 1)
            * _X * _poly(1, 1)
        )

    if case == "I":
        return (
            Fraction(1, 120960)
            * _poly(-1, 1) * _X * _poly(1, 1)
            * _by_degree([(6, 1), (4, 37), (2, 142), (0, 36)])
        )
    if case == "II":
        inner = _by_degree([
            (7, 2 * c + 1),
            (6, 2 * c * (2 * c + 1)),
            (5, -6 * c**3 - 13 * c**2 + 18 * c + 37),
            (4, 2 * c * (-6 * c**3 - 9 * c**2 + 22 * c + 38)),
            (3, 18 * c**5 + 57 * c**4 - 84 * c**3 - 266 * c**2 + 22 * c + 142),
            (2, -6 * c * (c**5 + 6 * c**4 + c**3 - 28 * c**2 - 12 * c + 24)),
            (1, 3 * (2 * c**6 + 12 * c**5 + 5 * c**4 - 50 * c**3 - 37 * c**2 + 32 * c + 12)),
            (0, -6 * c * (c**5 + 3 * c**4 - 5 * c**3 - 15 * c**2 + 4 * c + 12)),
        ])
        return Fraction(1, 120960) * _poly(1, 1) * _poly(-2 * c - 1, 1) * inner
    if case == "III":
        inner = _by_degree([
            (7, 2 * c + 1),
            (6, 4 * c**2 + 6 * c + 2),
            (5, -6 * c**3 - 5 * c**2 + 26 * c - 12),
            (4, -2 * (6 * c**4 + 15 * c**3 - 13 * c**2 - 9 * c + 13)),
            (3, 18 * c**5 + 33 * c**4 - 132 * c**3 - 148 * c**2 + 164 * c + 23),
            (2, -6 * (c**6 - 14 * c**4 - 8 * c**3 + 33 * c**2 + 16 * c - 12)),
            (1, -6 * c**6 + 75 * c**4 + 30 * c**3 - 159 * c**2 - 48 * c + 36),
            (0, -6 * c * (c**5 + 3 * c**4 - 5 * c**3 - 15 * c**2 + 4 * c + 12)),
        ])
        return Fraction(1, 120960) * _poly(-1, 1) * _poly(-2 * c - 1, 1) * inner
    return (
        Fraction(1, 120960)
        * _poly(-3, 1) * _poly(-2, 1) * _poly(-1, 1) * _poly(-1, 1)
        * _X * _poly(1, 1) * _poly(1, 1) * _poly(2, 1) * _poly(3, 1)
    )


def appendix_b_eval(g: int, case: str, p: int, c: int = 0) -> int:
    """Exact rational evaluation of the tabulated rank-g polynomial at p."""
    poly = appendix_b_polynomial(g, case, c)
    d = validate_parameters(p, g, c)
    if case in ("II", "III") and not 1 <= c <= d - 1:
        raise BadParameters(f"case {case} at p={p} needs 1 <= c <= {d - 1}, got {c}")
    value = poly.evaluate(p)
    if value.denominator != 1:
        raise NonIntegralResult(
            f"rank {g} case {case} at (p,c)=({p},{c}) gave {value}"
        )
    return int(value)


def interpolate_dim(g: int, c: int, eps: int, primes: list[int]) -> RationalPolynomial:
    """Exact polynomial in p through the points (p, |C_p(g,c,eps)|).

    Uses transfer-matrix counts, never floats.  Needs at least 3g-2 distinct
    primes, each >= max(5, 2c+3) so that c stays in range.
    """
    if g < 1 or c < 0 or eps not in (0, 1):
        raise BadParameters(f"bad (g, c, eps) = ({g}, {c}, {eps})")
    pts = sorted(set(primes))
    if len(pts) != len(primes):
        raise BadParameters(f"sample primes must be distinct: {primes}")
    floor = max(5, 2 * c + 3)
    for p in pts:
        if p < floor or not gmpy2.is_prime(p):
            raise BadParameters(f"sample {p} is not a prime >= {floor}")
    needed = max(3 * g - 2, 1)
    if len(pts) < needed:
        raise InsufficientPoints(
            f"need at least {needed} primes for rank {g}, got {len(pts)}"
        )

    values = [Fraction(count_colorings(p, g, c, eps)) for p in pts]

    # Newton's divided differences, accumulated as an exact polynomial
    table = list(values)
    result = _poly(values[0])
    basis = _poly(1)
    for k in range(1, len(pts)):
        for i in range(len(pts) - k):
            table[i] = (table[i + 1] - table[i]) / (pts[i + k] - pts[i])
        basis = basis * _poly(-pts[k - 1], 1)
        result = result + table[0] * basis

    for p, val in zip(pts, values):
        assert result.evaluate(p) == val, f"interpolation failed to reproduce p={p}"
    return result
