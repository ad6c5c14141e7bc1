import math
from unittest.mock import patch

import numpy as np
from django.test import SimpleTestCase
from scipy.special import airy

from hoairy.airy.contour import ContourSpec
from hoairy.airy.services.airy_service import AiryService
from hoairy.utils.exception_utils import ConfigError, NonConvergence, SectorViolation

AI_0 = 0.3550280538878172
AI_PRIME_0 = -0.2588194037928068


def alternative_contour(n: int, x: float) -> ContourSpec:
    angle = 0.35 * math.pi / (2 * n + 1)
    return ContourSpec(
        n=n,
        angle_in=math.pi - angle,
        angle_out=angle,
        radius=ContourSpec.default_radius(n, x) + 3.0,
        nodes_per_ray=260,
    )


class TestPhase(SimpleTestCase):
    def test_phase_atOrigin_isZero(self):
        self.assertEqual(0, AiryService.phase(1, 0j, 5.0))

    def test_phase_cubicAtOne_isOneThird(self):
        self.assertAlmostEqual(1 / 3, AiryService.phase(1, 1.0, 0.0), places=15)

    def test_phase_quinticAtI_isImaginary(self):
        value = AiryService.phase(2, 1j, 2.0)
        self.assertAlmostEqual(0.0, value.real, places=15)
        self.assertAlmostEqual(0.2 + 2.0, value.imag, places=14)


class TestContourSpec(SimpleTestCase):
    def test_default_anglesLieInSectors(self):
        for n in (1, 2, 3):
            ContourSpec.default(n).validate()

    def test_validate_outgoingAngleTooSteep_raisesSectorViolation(self):
        contour = ContourSpec(n=1, angle_in=0.9 * math.pi, angle_out=1.2, radius=6.0)
        with self.assertRaises(SectorViolation):
            contour.validate()

    def test_validate_incomingAngleTooFlat_raisesSectorViolation(self):
        contour = ContourSpec(n=2, angle_in=0.7 * math.pi, angle_out=0.1, radius=6.0)
        with self.assertRaises(SectorViolation):
            contour.validate()

    def test_defaultRadius_growsWithArgument(self):
        self.assertEqual(6.0, ContourSpec.default_radius(1, 0.0))
        self.assertAlmostEqual(10.0, ContourSpec.default_radius(1, -4.0))


class TestAiryService(SimpleTestCase):
    def test_aiN_firstOrderAtZero_isClassicalValue(self):
        self.assertAlmostEqual(AI_0, AiryService.ai_n(1, 0.0), delta=1e-13)

    def test_aiN_firstOrder_matchesClassicalAiry(self):
        for x in np.arange(-8.0, 4.01, 0.5):
            classical = airy(x)[0]
            self.assertAlmostEqual(
                classical, AiryService.ai_n(1, float(x)), delta=1e-10, msg=f"x={x}"
            )

    def test_aiNDeriv_firstDerivativeAtZero_isClassicalValue(self):
        self.assertAlmostEqual(AI_PRIME_0, AiryService.ai_n_deriv(1, 0.0, 1), delta=1e-13)

    def test_aiNDeriv_firstOrder_matchesClassicalDerivative(self):
        for x in np.arange(-6.0, 4.01, 1.0):
            self.assertAlmostEqual(
                airy(x)[1], AiryService.ai_n_deriv(1, float(x), 1), delta=1e-10
            )

    def test_aiNDeriv_orderZero_equalsAiN(self):
        for n in (1, 2, 3):
            self.assertEqual(AiryService.ai_n(n, 0.7), AiryService.ai_n_deriv(n, 0.7, 0))

    def test_aiNDeriv_secondDerivative_satisfiesAiryEquation(self):
        for x in (-3.0, -1.0, 0.0, 1.5, 3.0):
            self.assertAlmostEqual(
                x * AiryService.ai_n(1, x), AiryService.ai_n_deriv(1, x, 2), delta=1e-9
            )

    def test_values_fourthDerivative_satisfiesSecondOrderEquation(self):
        xs = np.array([-3.0, -1.0, 0.0, 1.5, 3.0])
        values = AiryService.values(2, xs)
        fourth = AiryService.values(2, xs, m=4)
        for index, x in enumerate(xs):
            self.assertAlmostEqual(
                -x * values[index].real, fourth[index].real, delta=1e-9, msg=f"x={x}"
            )

    def test_quadrature_workingRange_isReal(self):
        for n in (1, 2, 3):
            for x in np.linspace(-8.0, 8.0, 17):
                residual = AiryService.quadrature(n, float(x)).imag_residual
                self.assertLessEqual(abs(residual), 1e-12, f"n={n} x={x}")

    def test_quadrature_defaultContour_hasNegligibleTail(self):
        for n in (1, 2, 3):
            self.assertLess(AiryService.quadrature(n, -8.0).tail, 1e-13)

    def test_aiN_differentContours_agree(self):
        for n in (1, 2, 3):
            for x in np.linspace(-8.0, 8.0, 9):
                x = float(x)
                self.assertAlmostEqual(
                    AiryService.ai_n(n, x),
                    AiryService.ai_n(n, x, alternative_contour(n, x)),
                    delta=1e-10,
                    msg=f"n={n} x={x}",
                )

    def test_aiN_rightTail_decays(self):
        self.assertLess(abs(AiryService.ai_n(1, 5.0)), 1e-4)
        values = [AiryService.ai_n(1, x) for x in np.arange(0.0, 8.01, 0.5)]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_aiN_beyondWorkingRange_raisesNonConvergence(self):
        with self.assertRaises(NonConvergence):
            AiryService.ai_n(1, 13.0)

    def test_values_vectorized_matchesScalarQuadrature(self):
        xs = np.array([[-2.0, 0.0], [1.0, 3.0]])
        values = AiryService.values(2, xs)
        self.assertEqual((2, 2), values.shape)
        for index in np.ndindex(xs.shape):
            self.assertAlmostEqual(
                AiryService.ai_n(2, float(xs[index])), values[index].real, delta=1e-12
            )

    def test_quadrature_smallImaginaryPart_raisesNonConvergence(self):
        fake = (np.array([0.1 + 1e-11j]), np.array([1e-16]))
        with patch.object(AiryService, "values", return_value=fake):
            with self.assertRaises(NonConvergence):
                AiryService.quadrature(1, 0.0)

    def test_quadrature_roundingImaginaryPart_isAccepted(self):
        fake = (np.array([0.1 + 1e-13j]), np.array([1e-16]))
        with patch.object(AiryService, "values", return_value=fake):
            self.assertEqual(0.1, AiryService.quadrature(1, 0.0).value)


class TestSaddleQuadrature(SimpleTestCase):
    def test_saddleQuadrature_firstOrder_matchesClassicalAiryRelatively(self):
        for x in (2.0, 5.0, 10.0, 20.0):
            ai, aip, _, _ = airy(x)
            for m, expected in ((0, ai), (1, aip)):
                with self.subTest(x=x, m=m):
                    value = AiryService.saddle_quadrature(1, x, m).value
                    self.assertLess(abs(value / expected - 1.0), 1e-10)

    def test_saddleQuadrature_secondOrder_matchesContourQuadrature(self):
        for x in (2.0, 4.0, 6.0):
            for m in (0, 3):
                with self.subTest(x=x, m=m):
                    self.assertAlmostEqual(
                        AiryService.ai_n_deriv(2, x, m),
                        AiryService.saddle_quadrature(2, x, m).value,
                        delta=1e-11,
                    )

    def test_saddleQuadrature_smallArgument_raisesConfigError(self):
        with self.assertRaises(ConfigError):
            AiryService.saddle_quadrature(1, 1.0)
