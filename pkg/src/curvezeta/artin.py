"""Artin zeta functions of curves over finite fields, in Weil form.

The central object is :class:`CurveData`: a base field size q, a genus g,
and the numerator coefficients A_0..A_{2g} of

    Z(t) = exp(sum_m N_m t^m / m) = (A_0 + A_1 t + ... + A_{2g} t^{2g})
                                     / ((1 - t)(1 - q t)).

For data coming from genuine point counts the coefficients are integers
with A_0 = 1 and the symmetry A_{2g-i} = q^{g-i} A_i; non-genuine data may
break both so that negative fixtures (failing functional equations, failing
RH) can be represented.

A note on the class number: the count h = A_0 + ... + A_{2g} = P(1) of
degree-zero line-bundle classes and the point count N_1 = #X(F_q) coincide
for genus one but differ in general.  Formulas in this package that weight
by "the number of classes" always use h, never N_1; the two are conflated
in some classical displays and the distinction matters from genus two on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from curvezeta.exact import (
    Poly,
    RationalFunction,
    TruncatedSeries,
    ZeroReport,
    complex_roots,
    ratfun_equal,
    series_exp,
)

Rat = Fraction | int


@dataclass(frozen=True)
class CurveData:
    """Weil numerator data (q, g, A_0..A_{2g}) of a curve over F_q.

    ``genuine`` marks data produced from actual point counts; it switches on
    the stronger invariants (integer palindromic coefficients, nonnegative
    reconstructed counts, positive class number).
    """

    q: int
    g: int
    A: tuple[Fraction, ...]
    genuine: bool = False
    label: str = ""

    def __init__(self, q: int, g: int, A: Sequence[Rat], genuine: bool = False, label: str = ""):
        object.__setattr__(self, "q", int(q))
        object.__setattr__(self, "g", int(g))
        object.__setattr__(self, "A", tuple(Fraction(a) for a in A))
        object.__setattr__(self, "genuine", bool(genuine))
        object.__setattr__(self, "label", label)
        if self.q < 2:
            raise ValueError("base field size must be >= 2")
        if self.g < 0:
            raise ValueError("genus must be >= 0")
        if len(self.A) != 2 * self.g + 1:
            raise ValueError(f"need {2 * self.g + 1} coefficients for genus {self.g}")
        if self.A[0] != 1:
            raise ValueError("A_0 must equal 1")
        if self.genuine:
            if not artin_fe_check(self):
                raise ValueError("genuine curve data must satisfy A_{2g-i} = q^(g-i) A_i")
            if any(a.denominator != 1 for a in self.A):
                raise ValueError("genuine curve data must have integer coefficients")
            if self.class_number <= 0:
                raise ValueError("genuine curve data must have positive class number")
            for m in range(1, 2 * self.g + 1):
                if counts_from_numerator(self, m) < 0:
                    raise ValueError(f"genuine curve data reconstructs N_{m} < 0")

    @staticmethod
    def elliptic(q: int, a: int, genuine: bool = True, label: str = "") -> CurveData:
        """Genus-one data with Frobenius trace a, i.e. numerator 1 - a t + q t^2."""
        if a * a > 4 * q:
            raise ValueError("trace violates |a| <= 2*sqrt(q)")
        return CurveData(q, 1, [1, -a, q], genuine=genuine, label=label or f"elliptic(q={q},a={a})")

    @property
    def numerator(self) -> Poly:
        return Poly(self.A)

    @property
    def class_number(self) -> Fraction:
        """h = P(1), the number of degree-zero line-bundle classes."""
        return sum(self.A, Fraction(0))

    def zeta_ratfun(self) -> RationalFunction:
        """Z(t) as an exact rational function of t."""
        return RationalFunction(self.numerator, Poly([1, -(self.q + 1), self.q]))

    def describe(self) -> str:
        return self.label or f"curve(q={self.q},g={self.g},A={[str(a) for a in self.A]})"


@dataclass(frozen=True)
class WeilRoots:
    """Numerically paired reciprocal roots: omega_i * omega_pair(i) ~ q."""

    omegas: tuple[complex, ...]
    pair_sums: tuple[complex, ...]
    max_pair_defect: float


def numerator_from_counts(q: int, g: int, counts: Sequence[int]) -> CurveData:
    """Weil numerator coefficients from the point counts N_1..N_g.

    Expands exp(sum_{m<=g} N_m t^m / m) * (1 - t)(1 - q t) to order g with
    exact series arithmetic and completes A_{g+1}..A_{2g} by the symmetry
    A_{2g-i} = q^{g-i} A_i.
    """
    if len(counts) != g:
        raise ValueError(f"need exactly g = {g} counts, got {len(counts)}")
    if any(n < 0 for n in counts):
        raise ValueError("point counts must be nonnegative")
    log_terms = [Fraction(0)] + [Fraction(counts[m - 1], m) for m in range(1, g + 1)]
    expanded = series_exp(TruncatedSeries(log_terms))
    poly = Poly([1, -(q + 1), q])
    A = [Fraction(0)] * (2 * g + 1)
    for i in range(g + 1):
        acc = Fraction(0)
        for j in range(min(i, 2) + 1):
            acc += poly[j] * expanded[i - j]
        A[i] = acc
    if A[0] != 1:
        raise ValueError("inconsistent counts: expansion has A_0 != 1")
    for i in range(g):
        A[2 * g - i] = Fraction(q) ** (g - i) * A[i]
    return CurveData(q, g, A, genuine=True)


def counts_from_numerator(c: CurveData, m: int) -> int:
    """N_m = q^m + 1 - p_m via the Newton power-sum recurrence on the A_i.

    p_m is the m-th power sum of the reciprocal roots; no floating point.
    """
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    p = [Fraction(0)] * (m + 1)
    for n in range(1, m + 1):
        acc = -n * c.A[n] if n <= 2 * c.g else Fraction(0)
        for k in range(1, n):
            if n - k <= 2 * c.g:
                acc -= p[k] * c.A[n - k]
        p[n] = acc
    val = Fraction(c.q) ** m + 1 - p[m]
    if val.denominator != 1:
        raise ValueError("non-integer reconstructed count (non-genuine data)")
    return int(val)


def zeta_hat_special(c: CurveData, n: int) -> Fraction:
    """The completed zeta q^{(g-1)s} Z(q^{-s}) at the integer s = n.

    n = 0 and n = 1 are the simple-pole regularized values
    (sum A_i)/(q-1) and (sum A_i q^{g-i})/(q-1); every other integer is a
    plain exact evaluation.
    """
    q, g = Fraction(c.q), c.g
    if n == 0:
        return sum(c.A, Fraction(0)) / (q - 1)
    if n == 1:
        return sum(a * q ** (g - i) for i, a in enumerate(c.A)) / (q - 1)
    u = q**-n
    value = c.numerator.evaluate(u) / ((1 - u) * (1 - q * u))
    return q ** ((g - 1) * n) * value


def zeta_plain(c: CurveData, n: int) -> Fraction:
    """The unhatted value Z(q^{-n}); n must avoid the poles n = 0, 1."""
    if n in (0, 1):
        raise ValueError("Z(q^power) has a pole at n = 0 and n = 1")
    q = Fraction(c.q)
    u = q**-n
    return c.numerator.evaluate(u) / ((1 - u) * (1 - q * u))


def zeta_hat_ratfun(c: CurveData, shift: int = 0, u_power: int = 1) -> RationalFunction:
    """The completed zeta at argument (s_var * u_power + shift), in u = q^{-s_var}.

    zeta_hat(n + k*s) = q^{(g-1)n} * u^{-k(g-1)} * Z(q^{-n} u^k); everything
    stays an exact rational function of u.
    """
    q, g = Fraction(c.q), c.g
    base = c.zeta_ratfun().compose_monomial(q**-shift, u_power)
    pref = RationalFunction.constant(q ** ((g - 1) * shift)) * RationalFunction.t(
        -(g - 1) * u_power
    )
    return pref * base


def artin_fe_check(c: CurveData) -> bool:
    """Exact coefficient symmetry A_{2g-i} = q^{g-i} A_i for all i."""
    q, g = Fraction(c.q), c.g
    return all(c.A[2 * g - i] == q ** (g - i) * c.A[i] for i in range(g + 1))


def artin_fe_ratfun_check(c: CurveData) -> bool:
    """Functional equation as an exact rational-function identity in u = q^{-s}.

    q^{(g-1)(1-s)} Z(q^{s-1}) = q^{(g-1)s} Z(q^{-s}) becomes, after clearing
    the u powers,  q^{g-1} u^{2(g-1)} Z(1/(q u)) = Z(u).
    """
    q, g = Fraction(c.q), c.g
    z = c.zeta_ratfun()
    lhs = (
        RationalFunction.constant(q ** (g - 1))
        * RationalFunction.t(2 * (g - 1))
        * z.reciprocal_arg(1 / q)
    )
    return ratfun_equal(lhs, z)


def rh_check_artin(c: CurveData, tol: float = 1e-9) -> ZeroReport:
    """Numerically check |omega_i| = sqrt(q) for all reciprocal roots.

    The numerator's roots t_i are found by the deterministic root finder;
    the report lists the reciprocal-root moduli 1/|t_i| and their deviation
    from sqrt(q).  Genus zero passes vacuously.
    """
    if c.g < 1:
        return ZeroReport((), float(c.q) ** 0.5, (), True, tol)
    rset = complex_roots(c.numerator)
    sq = float(c.q) ** 0.5
    omegas = tuple(1 / t for t in rset.roots)
    deviations = tuple(abs(abs(w) - sq) for w in omegas)
    verdict = all(d <= tol * sq for d in deviations)
    return ZeroReport(omegas, sq, deviations, verdict, tol)


def weil_roots(c: CurveData, tol: float = 1e-6) -> WeilRoots:
    """Reciprocal roots paired so products land within tol of q.

    Greedy matching on |omega_i * omega_j - q|; reports the worst pairing
    defect so callers can decide whether the pairing is trustworthy.
    """
    if c.g < 1:
        return WeilRoots((), (), 0.0)
    rset = complex_roots(c.numerator)
    omegas = [1 / t for t in rset.roots]
    unused = list(range(len(omegas)))
    ordered: list[complex] = []
    sums: list[complex] = []
    worst = 0.0
    while unused:
        i = unused.pop(0)
        best_j = min(unused, key=lambda j: abs(omegas[i] * omegas[j] - c.q))
        unused.remove(best_j)
        worst = max(worst, abs(omegas[i] * omegas[best_j] - c.q))
        ordered.extend([omegas[i], omegas[best_j]])
        sums.append(omegas[i] + omegas[best_j])
    if worst > tol * c.q:
        raise ValueError(f"pairing defect {worst:.3e} exceeds tolerance")
    return WeilRoots(tuple(ordered), tuple(sums), worst)
