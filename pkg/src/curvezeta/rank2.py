"""The rank-two pure zeta: closed form, numerator, and invariants.

Everything here revolves around one rational function of T = t^2,

    F(T) = (q^{g-1} sum A_i T^i  -  T sum A_i q^i T^i)
           / (q^{g-1} (1 - T)(1 - qT)(1 - q^2 T)),

whose Laurent companion F(T) * T^{-(g-1)} is the rank-two zeta normalized
so its T-expansion starts at 1.  The symmetry of the A_i makes (1 - qT) an
exact factor of the numerator, and after the substitution X = qT what is
left is an integer palindromic polynomial N(X) -- the canonical rank-two
numerator.  The T-series coefficients of alpha(0) * F(T) are the rank-two
alpha invariants on the even degree grid, and the T^g coefficient releases
beta(0) through the tail term (Q - 1) beta(0) T^g / ((1-T)(1-QT)), Q = q^2.

Two display variants from the source derivation chain are exposed but not
asserted: a prefactored coefficient list (equal to N's coefficients divided
by block-dependent powers of q) and an alternate beta expression in special
zeta values.  Their discrepancies against the canonical values are stable
and reported by :func:`variant_report`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from curvezeta.artin import CurveData, zeta_hat_special
from curvezeta.exact import Poly, RationalFunction, ratfun_equal
from curvezeta.invariants import InvariantTable


class NormalizationError(ValueError):
    """The closed form's T^0 coefficient is not exactly one."""


@dataclass(frozen=True)
class Rank2Numerator:
    """Palindromic coefficients of N(X), X = qT, from the grouped expansion."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))


@dataclass(frozen=True)
class PureZeta:
    """Z as a rational function of T = t^r, with the Laurent shift T^{-(g-1)}.

    The shift is carried as an explicit integer so the stored object stays a
    genuine polynomial quotient: zeta_hat(t) = Z(T) * T^{-shift}.
    """

    r: int
    q: int
    Z: RationalFunction
    shift: int


@lru_cache(maxsize=256)
def rank2_closed_form(c: CurveData) -> tuple[RationalFunction, int]:
    """F(T) and its Laurent shift g-1.

    Built from the single-fraction display and cross-checked on the spot
    against the independently assembled two-term sum
    zeta_hat(2s)/(1 - q^{2-2s}) + zeta_hat(2s-1)/(1 - q^{2s}).
    """
    if c.g < 1:
        raise ValueError("rank-two zeta needs genus >= 1")
    q, g = Fraction(c.q), c.g
    P = c.numerator
    num = Poly([a * q ** (g - 1) for a in c.A]) - Poly.x(1) * Poly(
        [a * q**i for i, a in enumerate(c.A)]
    )
    den = Fraction(q ** (g - 1)) * Poly([1, -1]) * Poly([1, -q]) * Poly([1, -q * q])
    F = RationalFunction(num, den)

    # two-term assembly: both summands share the T^{-(g-1)} shift
    first = RationalFunction(P, Poly([1, -1]) * Poly([1, -q]) * Poly([1, -q * q]))
    second = (
        RationalFunction.constant(q ** -(g - 1))
        * RationalFunction(P.scale_arg(q), Poly([1, -q]) * Poly([1, -q * q]))
        * RationalFunction(Poly([0, -1]), Poly([1, -1]))
    )
    if not ratfun_equal(F, first + second):
        raise AssertionError("closed form disagrees with the two-term sum")
    return F, g - 1


@lru_cache(maxsize=256)
def rank2_numerator(c: CurveData) -> Rank2Numerator:
    """N(X) by the grouped expansion, checked against the closed form.

    [X^k] N = sum_{j <= min(k, 2g-k)} (A_j q^{g-j} - A_{j-1}); palindromy
    is structural.  Consistency with F(T): q * Num(T)|_{T=X/q} factors as
    (1 - X) * N(X), equivalently F(T) = N(qT) / (q^g (1-T)(1-q^2 T)).
    """
    if c.g < 1:
        raise ValueError("rank-two numerator needs genus >= 1")
    q, g = Fraction(c.q), c.g
    coeffs = []
    for k in range(2 * g + 1):
        acc = Fraction(0)
        for j in range(min(k, 2 * g - k) + 1):
            acc += c.A[j] * q ** (g - j)
            if j > 0:
                acc -= c.A[j - 1]
        coeffs.append(acc)
    numerator = Rank2Numerator(tuple(coeffs))
    if not numerator.is_palindromic():
        raise AssertionError("grouped expansion lost palindromy")
    F, _ = rank2_closed_form(c)
    recon = RationalFunction(
        Poly(coeffs).scale_arg(q),
        Fraction(q**g) * Poly([1, -1]) * Poly([1, -q * q]),
    )
    if not ratfun_equal(F, recon):
        raise AssertionError("grouped expansion disagrees with the closed form")
    return numerator


def normalized_coefficients(c: CurveData) -> list[Fraction]:
    """The prefactored display variant: q^{-(g-k)} * [X^k] N for k = 1..g.

    These equal the T-variable numerator coefficients normalized to a unit
    constant term, not the canonical integer list; :func:`variant_report`
    records the block-dependent ratio q^{k-g}.
    """
    n = rank2_numerator(c)
    q, g = Fraction(c.q), c.g
    return [q ** -(g - k) * n.coeffs[k] for k in range(1, g + 1)]


def beta_from_special_values(c: CurveData) -> Fraction:
    """The alternate display for beta(0): q^{2(g-1)} (zh(2) - zh(1)^2/(q^2-1)).

    Inconsistent with the series route on every fixture tried (it drops a
    zh(1) factor); exposed for the discrepancy report only.
    """
    q = Fraction(c.q)
    z1, z2 = zeta_hat_special(c, 1), zeta_hat_special(c, 2)
    return q ** (2 * (c.g - 1)) * (z2 - z1 * z1 / (q * q - 1))


def alpha2_zero(c: CurveData) -> Fraction:
    """alpha(0) in rank two: q^{g-1} * zeta_hat(1)."""
    return Fraction(c.q) ** (c.g - 1) * zeta_hat_special(c, 1)


def eq_extract(
    F: RationalFunction, shift: int, alpha0: Fraction, q: int, g: int
) -> InvariantTable:
    """Rank-two invariants from the T-series of Z = alpha0 * F(T).

    The coefficient of T^m is alpha(2m); the T^g coefficient carries
    Q alpha(2(g-2)) + (Q-1) beta(0) with Q = q^2, which pins beta(0).
    A unit T^0 coefficient of F is required -- anything else signals that
    the caller's normalization (and hence alpha0) is inconsistent.
    """
    if shift != g - 1:
        raise ValueError("closed form carries the shift g-1")
    series = F.series(g)
    if series[0] != 1:
        raise NormalizationError(f"T^0 coefficient is {series[0]}, expected 1")
    Q = Fraction(q) ** 2
    alphas = tuple(alpha0 * series[m] for m in range(g))
    top = alpha0 * series[g]
    if g >= 2:
        top -= Q * alphas[g - 2]
    beta = top / (Q - 1)
    gammas = {2 * m: alphas[m] + beta for m in range(g)}
    return InvariantTable(r=2, alphas=alphas, beta0=beta, gammas=gammas)


def rank2_invariants(c: CurveData) -> InvariantTable:
    """The full rank-two pipeline: closed form -> series -> invariants."""
    F, shift = rank2_closed_form(c)
    return eq_extract(F, shift, alpha2_zero(c), c.q, c.g)


def pure_zeta(c: CurveData) -> PureZeta:
    """The rank-two zeta alpha(0) * F(T) with its Laurent shift."""
    F, shift = rank2_closed_form(c)
    return PureZeta(r=2, q=c.q, Z=RationalFunction.constant(alpha2_zero(c)) * F, shift=shift)


def pure_fe_check(z: PureZeta) -> bool:
    """Exact functional equation zeta_hat(1/(qt)) = zeta_hat(t).

    With zeta_hat(t) = Z(T) T^{-shift} and T = t^r the substitution reads
    Q^{shift} T^{2 shift} Z(1/(QT)) = Z(T), Q = q^r.
    """
    Q = Fraction(z.q) ** z.r
    lhs = (
        RationalFunction.constant(Q**z.shift)
        * RationalFunction.t(2 * z.shift)
        * z.Z.reciprocal_arg(1 / Q)
    )
    return ratfun_equal(lhs, z.Z)


def triangular_alpha_ratios(
    normalized: Sequence[Fraction], Q: Fraction, count: int
) -> list[Fraction]:
    """Predicted alpha(r m)/alpha(0) from unit-normalized numerator coefficients.

    The rank-one triangular system with q replaced by Q:
    ratio_m = sum_{j<=m} (Q^{m-j+1} - 1)/(Q - 1) * coeff_j.
    """
    if not normalized or normalized[0] != 1:
        raise ValueError("coefficients must be normalized to a unit constant term")
    out = []
    for m in range(count):
        acc = Fraction(0)
        for j in range(min(m, len(normalized) - 1) + 1):
            acc += (Q ** (m - j + 1) - 1) / (Q - 1) * normalized[j]
        out.append(acc)
    return out


def variant_report(c: CurveData) -> dict:
    """Canonical values next to the display variants, with their ratios.

    The coefficient variant differs from the canonical integer list by the
    factor q^{k-g} at index k; the beta variant is reported with the
    canonical value and whether they agree (they do not, in general).
    """
    n = rank2_numerator(c)
    variants = normalized_coefficients(c)
    q = Fraction(c.q)
    table = rank2_invariants(c)
    alt_beta = beta_from_special_values(c)
    coeff_rows = []
    for k in range(1, c.g + 1):
        canonical = n.coeffs[k]
        variant = variants[k - 1]
        coeff_rows.append(
            {
                "index": k,
                "canonical": canonical,
                "variant": variant,
                "ratio": None if canonical == 0 else variant / canonical,
                "expected_ratio": q ** (k - c.g),
            }
        )
    return {
        "coefficients": coeff_rows,
        "beta_canonical": table.beta0,
        "beta_variant": alt_beta,
        "beta_agrees": alt_beta == table.beta0,
    }
