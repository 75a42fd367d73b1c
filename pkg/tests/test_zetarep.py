"""The four zeta representations, the even closed form, and the moment identity."""

from fractions import Fraction

import mpmath as mp
import pytest

from oddzeta import expansion
from oddzeta.errors import DomainError, LemmaViolation
from oddzeta.pipoly import PiLaurent, PiPoly
from oddzeta.quad import integrate_01, working_precision
from oddzeta.reference import zeta_ref
from oddzeta.zetarep import (
    Representation,
    lemma_check,
    zeta_even_closed,
    zeta_even_value,
    zeta_odd,
    zeta_odd_ck,
    zeta_odd_corollary,
    zeta_odd_theorem,
)

ZETA3 = "1.202056903159594285399738161511449990765"
ZETA5 = "1.036927755143369926331365486457034168057"
ZETA7 = "1.0083492773819228268397975498497967596"


class TestTheoremForm:
    @pytest.mark.parametrize(
        "p,anchor", [(1, ZETA3), (2, ZETA5), (3, ZETA7)]
    )
    def test_against_anchors(self, p, anchor):
        comp = zeta_odd_theorem(p, 192)
        assert comp.quad.converged
        with mp.workprec(208):
            assert abs(comp.value - mp.mpf(anchor)) < mp.mpf(10) ** -35
        assert comp.abs_error_vs_reference < mp.mpf(10) ** -40

    def test_rejects_p_zero(self):
        with pytest.raises(DomainError):
            zeta_odd_theorem(0, 96)


class TestCorollaryForm:
    def test_printed_integrand_matches(self):
        # pi^3/12 * integral t (1 - t^2) tan(pi t/2) dt must equal the
        # corollary value computed through the expanded polynomial
        precision = 160
        comp = zeta_odd_corollary(1, precision)
        result = integrate_01(
            lambda t: t * (1 - t * t) * mp.tan(mp.pi * t / 2),
            mp.mpf(10) ** -40,
            precision,
        )
        with mp.workprec(working_precision(precision)):
            direct = mp.pi**3 / 12 * result.value
            assert abs(direct - comp.value) < mp.mpf(10) ** -38

    def test_zeta5(self):
        comp = zeta_odd_corollary(2, 192)
        with mp.workprec(208):
            assert abs(comp.value - mp.mpf(ZETA5)) < mp.mpf(10) ** -35

    def test_zeta11_printed_factored_integrand(self):
        # t (1-t^2)(t^2-5)(3t^6-37t^4+225t^2-511) with prefactor pi^11/239500800
        precision = 160
        comp = zeta_odd_corollary(5, precision)

        def integrand(t):
            t2 = t * t
            return (
                t
                * (1 - t2)
                * (t2 - 5)
                * (((3 * t2 - 37) * t2 + 225) * t2 - 511)
                * mp.tan(mp.pi * t / 2)
            )

        result = integrate_01(integrand, mp.mpf(10) ** -40, precision)
        with mp.workprec(working_precision(precision)):
            direct = mp.pi**11 / 239500800 * result.value
            assert abs(direct - comp.value) < mp.mpf(10) ** -36
            assert abs(direct - zeta_ref(11, precision)) < mp.mpf(10) ** -36


class TestCKForms:
    @pytest.mark.parametrize("variant", ["euler", "bernoulli"])
    def test_zeta3(self, variant):
        comp = zeta_odd_ck(1, variant, 192)
        with mp.workprec(208):
            assert abs(comp.value - mp.mpf(ZETA3)) < mp.mpf(10) ** -35

    @pytest.mark.parametrize("variant", ["euler", "bernoulli"])
    def test_zeta9(self, variant):
        comp = zeta_odd_ck(4, variant, 192)
        assert comp.abs_error_vs_reference < mp.mpf(10) ** -40

    def test_unknown_variant(self):
        with pytest.raises(DomainError):
            zeta_odd_ck(1, "chebyshev", 96)


class TestCrossAgreement:
    def test_pairwise_small_p(self):
        precision = 192
        for p in (1, 2, 3):
            values = [zeta_odd(p, rep, precision).value for rep in Representation]
            with mp.workprec(208):
                spread = max(values) - min(values)
                assert spread < mp.mpf(10) ** -40, p

    def test_half_angle_consistency(self):
        # pi/2 * integral tan(pi t/2) (1 + cos(pi t)) P_2p(t) dt = -1/2,
        # which is exactly the gap between theorem and corollary forms
        precision = 160
        from oddzeta.pipoly import poly_evaluator

        wp = working_precision(precision)
        poly_fn = poly_evaluator(expansion.p_poly(2), wp)
        result = integrate_01(
            lambda t: mp.tan(mp.pi * t / 2) * (1 + mp.cos(mp.pi * t)) * poly_fn(t),
            mp.mpf(10) ** -40,
            precision,
        )
        with mp.workprec(wp):
            assert abs(mp.pi / 2 * result.value + mp.mpf(1) / 2) < mp.mpf(10) ** -38

    def test_dispatch_accepts_strings(self):
        comp = zeta_odd(1, "corollary", 96)
        assert comp.representation is Representation.COROLLARY


class TestEvenClosedForm:
    def test_exact_monomials(self):
        assert zeta_even_closed(1) == PiLaurent.monomial(2, Fraction(1, 6))
        assert zeta_even_closed(2) == PiLaurent.monomial(4, Fraction(1, 90))
        assert zeta_even_closed(3) == PiLaurent.monomial(6, Fraction(1, 945))

    def test_matches_oracle(self):
        precision = 224
        for p in range(1, 5):
            exact = zeta_even_value(p, precision)
            oracle = zeta_ref(2 * p, precision)
            with mp.workprec(precision + 16):
                assert abs(exact - oracle) < mp.mpf(10) ** -55, p


class TestLemmaCheck:
    @pytest.mark.parametrize("p", [1, 2, 12])
    def test_exact(self, p):
        assert lemma_check(p) == PiLaurent.monomial(-1, -1)

    def test_violation_detected(self, monkeypatch):
        wrong = PiPoly({(3, 2): Fraction(1, 6)})  # dropped the -t/6 term

        monkeypatch.setattr(expansion, "p_poly", lambda p: wrong)
        with pytest.raises(LemmaViolation):
            lemma_check(1)

    def test_rejects_p_zero(self):
        with pytest.raises(DomainError):
            lemma_check(0)


class TestComputationRecord:
    def test_error_is_recomputed_property(self):
        comp = zeta_odd_corollary(1, 96)
        first = comp.abs_error_vs_reference
        second = comp.abs_error_vs_reference
        assert first == second
        assert first == abs(comp.value - comp.reference)
