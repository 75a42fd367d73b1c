"""Integral representations of zeta at odd integers, plus exact side checks.

Four numeric routes to zeta(2p+1), all reduced to tanh-sinh quadrature over
(0,1) with exact polynomial data:

* ``theorem``       1/2 + pi/2 * integral tan(pi t/2) cos(pi t) P_{2p}(t) dt
* ``corollary``     -pi/2 * integral tan(pi t/2) P_{2p}(t) dt
* ``ck_euler``      the Cvijovic-Klinowski form over the Euler polynomial E_{2p}
* ``ck_bernoulli``  its companion over the Bernoulli polynomial B_{2p+1}

plus the exact closed form zeta(2p) = |B_{2p}| 2^{2p-1} pi^{2p} / (2p)! and
the zero-tolerance moment identity integral_0^1 P_{2p}(t) sin(pi t) dt = -1/pi.

Every tan(pi t/2) pole at t = 1 is cancelled by a zero of the polynomial
factor (P_{2p}, E_{2p} and B_{2p+1} all vanish there), so the integrands are
bounded and the quadrature contract applies directly.  Computed values are
always reported next to a freshly computed oracle value, never a stored one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from . import exactnum, expansion, pipoly, quad, reference
from .errors import DomainError, LemmaViolation
from .pipoly import PiLaurent, PiPoly

__all__ = [
    "Representation",
    "ZetaComputation",
    "zeta_odd",
    "zeta_odd_theorem",
    "zeta_odd_corollary",
    "zeta_odd_ck",
    "zeta_even_closed",
    "zeta_even_value",
    "lemma_check",
    "clear_caches",
]


class Representation(str, enum.Enum):
    THEOREM = "theorem"
    COROLLARY = "corollary"
    CK_EULER = "ck_euler"
    CK_BERNOULLI = "ck_bernoulli"


@dataclass(frozen=True)
class ZetaComputation:
    """One computed zeta(2p+1) value with its quadrature diagnostics."""

    p: int
    representation: Representation
    value: mp.mpf
    quad: quad.QuadResult
    reference: mp.mpf

    @property
    def abs_error_vs_reference(self):
        """|value - reference|, recomputed on access (never stored)."""
        with mp.workprec(max(mp.mp.prec, 64)):
            return abs(self.value - self.reference)


# Shared per-working-precision caches of tan(pi t / 2) and cos(pi t); the
# quadrature abscissas are identical across p and representation, so the trig
# cost is paid once per precision.
_tan_half_cache: dict = {}
_cos_cache: dict = {}


def _tan_half(wp: int):
    cache = _tan_half_cache.setdefault(wp, {})

    def value(t):
        v = cache.get(t)
        if v is None:
            v = mp.tan(mp.pi * t / 2)
            cache[t] = v
        return v

    return value


def _cos_pi(wp: int):
    cache = _cos_cache.setdefault(wp, {})

    def value(t):
        v = cache.get(t)
        if v is None:
            v = mp.cos(mp.pi * t)
            cache[t] = v
        return v

    return value


def clear_caches() -> None:
    _tan_half_cache.clear()
    _cos_cache.clear()
    reference.zeta_ref.cache_clear()


def _require_p(p: int) -> None:
    if p < 1:
        raise DomainError("p must be >= 1")


def _finish(p, representation, raw_value, result, precision) -> ZetaComputation:
    with mp.workprec(precision):
        value = +raw_value
    return ZetaComputation(
        p=p,
        representation=representation,
        value=value,
        quad=result,
        reference=reference.zeta_ref(2 * p + 1, precision),
    )


def zeta_odd_theorem(p: int, precision: int) -> ZetaComputation:
    """zeta(2p+1) = 1/2 + pi/2 * integral_0^1 tan(pi t/2) cos(pi t) P_{2p}(t) dt."""
    _require_p(p)
    wp = quad.working_precision(precision)
    poly_fn = pipoly.poly_evaluator(expansion.p_poly(p), wp)
    tan_half = _tan_half(wp)
    cos_pi = _cos_pi(wp)

    def integrand(t):
        return tan_half(t) * cos_pi(t) * poly_fn(t)

    result = quad.integrate_01(integrand, reference.quad_tolerance(precision), precision)
    with mp.workprec(wp):
        raw = mp.mpf(1) / 2 + mp.pi / 2 * result.value
    return _finish(p, Representation.THEOREM, raw, result, precision)


def zeta_odd_corollary(p: int, precision: int) -> ZetaComputation:
    """zeta(2p+1) = -pi/2 * integral_0^1 tan(pi t/2) P_{2p}(t) dt."""
    _require_p(p)
    wp = quad.working_precision(precision)
    poly_fn = pipoly.poly_evaluator(expansion.p_poly(p), wp)
    tan_half = _tan_half(wp)

    def integrand(t):
        return tan_half(t) * poly_fn(t)

    result = quad.integrate_01(integrand, reference.quad_tolerance(precision), precision)
    with mp.workprec(wp):
        raw = -mp.pi / 2 * result.value
    return _finish(p, Representation.COROLLARY, raw, result, precision)


def zeta_odd_ck(p: int, variant: str, precision: int) -> ZetaComputation:
    """zeta(2p+1) in the Cvijovic-Klinowski polynomial forms.

    variant "euler":      (-1)^p 2^{2p-1} pi^{2p+1} / ((2^{2p+1}-1)(2p)!)
                          * integral_0^1 E_{2p}(t) tan(pi t/2) dt
    variant "bernoulli":  (-1)^p 2^{2p} pi^{2p+1} / (2p+1)!
                          * integral_0^1 B_{2p+1}(t) tan(pi t/2) dt
    """
    _require_p(p)
    if variant == "euler" or variant == Representation.CK_EULER:
        poly = exactnum.euler_polynomial(2 * p)
        prefactor = Fraction(
            (-1) ** p * (1 << (2 * p - 1)), ((1 << (2 * p + 1)) - 1) * math.factorial(2 * p)
        )
        representation = Representation.CK_EULER
    elif variant == "bernoulli" or variant == Representation.CK_BERNOULLI:
        poly = exactnum.bernoulli_polynomial(2 * p + 1)
        prefactor = Fraction((-1) ** p * (1 << (2 * p)), math.factorial(2 * p + 1))
        representation = Representation.CK_BERNOULLI
    else:
        raise DomainError(f"unknown variant {variant!r}")
    wp = quad.working_precision(precision)
    poly_fn = pipoly.poly_evaluator(PiPoly.from_rational_poly(poly), wp)
    tan_half = _tan_half(wp)

    def integrand(t):
        return tan_half(t) * poly_fn(t)

    result = quad.integrate_01(integrand, reference.quad_tolerance(precision), precision)
    with mp.workprec(wp):
        scale = mp.mpf(prefactor.numerator) / prefactor.denominator * mp.pi ** (2 * p + 1)
        raw = scale * result.value
    return _finish(p, representation, raw, result, precision)


def zeta_odd(p: int, representation, precision: int) -> ZetaComputation:
    """Dispatch on a :class:`Representation` (or its string value)."""
    rep = Representation(representation)
    if rep is Representation.THEOREM:
        return zeta_odd_theorem(p, precision)
    if rep is Representation.COROLLARY:
        return zeta_odd_corollary(p, precision)
    return zeta_odd_ck(p, "euler" if rep is Representation.CK_EULER else "bernoulli", precision)


def zeta_even_closed(p: int) -> PiLaurent:
    """Exact zeta(2p) = |B_{2p}| 2^{2p-1} / (2p)! * pi^{2p} as a pi-monomial."""
    _require_p(p)
    coeff = abs(exactnum.bernoulli_number(2 * p)) * Fraction(1 << (2 * p - 1), math.factorial(2 * p))
    return PiLaurent.monomial(2 * p, coeff)


def zeta_even_value(p: int, precision: int):
    """Numeric view of :func:`zeta_even_closed` at ``precision`` bits."""
    return pipoly.laurent_eval(zeta_even_closed(p), precision)


_MINUS_INV_PI = PiLaurent.monomial(-1, Fraction(-1))


def lemma_check(p: int) -> PiLaurent:
    """Exact integral_0^1 P_{2p}(t) sin(pi t) dt; must equal -1/pi.

    Returns the pi-Laurent value (always exactly -pi^{-1}) or raises
    LemmaViolation when any other term survives, which would mean the
    polynomial pipeline upstream is corrupted.
    """
    _require_p(p)
    moment = pipoly.integrate_against_sin(expansion.p_poly(p))
    if moment != _MINUS_INV_PI:
        raise LemmaViolation(
            f"sine moment of P_{2 * p} is {moment!r}, expected exactly -pi^-1"
        )
    return moment
