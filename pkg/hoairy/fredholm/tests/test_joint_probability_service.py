from django.test import SimpleTestCase

from hoairy.fredholm.services.joint_probability_service import (
    JointProbabilityService,
)
from hoairy.fredholm.services.nystrom_service import NystromService
from hoairy.fredholm.tests.factories import IntervalSystemFactory
from hoairy.utils.exception_utils import ConfigError


class TestStencils(SimpleTestCase):
    def test_oneSidedStencil_orderZero_isPointValue(self):
        self.assertEqual((1.0,), JointProbabilityService.one_sided_stencil(0))

    def test_oneSidedStencil_coefficientsSumToZero(self):
        for order in (1, 2, 3):
            self.assertAlmostEqual(
                0.0, sum(JointProbabilityService.one_sided_stencil(order)), places=9
            )

    def test_mixedDerivative_cubic_isExact(self):
        value = JointProbabilityService.mixed_derivative(
            lambda alphas: alphas[0] ** 3, (1,), 0.1
        )
        self.assertAlmostEqual(3.0, value, places=9)

    def test_mixedDerivative_secondOrderOfQuartic_isExact(self):
        value = JointProbabilityService.mixed_derivative(
            lambda alphas: alphas[0] ** 4, (2,), 0.1
        )
        self.assertAlmostEqual(12.0, value, places=7)

    def test_mixedDerivative_crossTerm_isProductOfPartials(self):
        value = JointProbabilityService.mixed_derivative(
            lambda alphas: alphas[0] ** 2 * alphas[1] ** 3, (1, 1), 0.1
        )
        self.assertAlmostEqual(6.0, value, places=8)


class TestAdmissibleIndices(SimpleTestCase):
    def test_admissibleIndices_singleThreshold_countsUpToOrder(self):
        self.assertEqual(
            [(0,), (1,), (2,)], list(JointProbabilityService.admissible_indices((3,)))
        )

    def test_admissibleIndices_twoThresholds_boundsPartialSums(self):
        self.assertEqual(
            [(0, 0), (0, 1)], list(JointProbabilityService.admissible_indices((1, 2)))
        )
        self.assertEqual(
            [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)],
            list(JointProbabilityService.admissible_indices((2, 3))),
        )


class TestValidateOrders(SimpleTestCase):
    def test_validateOrders_rejectsBadOrders(self):
        system = IntervalSystemFactory.create()
        for orders in [(0,), (6,), (1, 2)]:
            with self.subTest(orders=orders):
                with self.assertRaises(ConfigError):
                    JointProbabilityService.validate_orders(system, orders, 0.05)

    def test_validateOrders_nonIncreasing_raisesConfigError(self):
        system = IntervalSystemFactory.create(two_gaps=True)
        with self.assertRaises(ConfigError):
            JointProbabilityService.validate_orders(system, (2, 2), 0.05)

    def test_validateOrders_stepReachingBelowZero_raisesConfigError(self):
        with self.assertRaises(ConfigError):
            JointProbabilityService.validate_orders(
                IntervalSystemFactory.create(), (3,), 0.5
            )


class TestJointProb(SimpleTestCase):
    def test_jointProb_largestPoint_isGeneratingFunction(self):
        system = IntervalSystemFactory.create()
        result = JointProbabilityService.joint_prob(system, 1, (1,))
        self.assertEqual(NystromService.gen_fn(system, 1), result.value)
        self.assertEqual(1, result.terms)

    def test_jointProb_secondPoint_matchesPolynomialFit(self):
        system = IntervalSystemFactory.create()
        derivatives = JointProbabilityService.polynomial_fit_derivatives(system, 1)
        result = JointProbabilityService.joint_prob(system, 1, (2,))
        self.assertAlmostEqual(derivatives[0] - derivatives[1], result.value, delta=1e-5)
        self.assertEqual(2, result.terms)

    def test_jointProb_secondPoint_isBetweenLargestPointAndOne(self):
        system = IntervalSystemFactory.create()
        largest = NystromService.gen_fn(system, 2)
        result = JointProbabilityService.joint_prob(system, 2, (2,))
        self.assertGreaterEqual(result.value, largest)
        self.assertLessEqual(result.value, 1.0 + 1e-6)
        self.assertLess(result.error_estimate, 1e-5)

    def test_jointProb_twoThresholds_isBoundedByMarginals(self):
        system = IntervalSystemFactory.create(two_gaps=True)
        result = JointProbabilityService.joint_prob(system, 1, (1, 2))
        below_lower = NystromService.gen_fn(system, 1)
        below_upper = NystromService.gen_fn(system.with_weights((1.0, 0.0)), 1)
        self.assertGreaterEqual(result.value, below_lower - 1e-6)
        self.assertLessEqual(result.value, below_upper + 1e-6)

    def test_polynomialFitDerivatives_twoThresholds_raisesConfigError(self):
        with self.assertRaises(ConfigError):
            JointProbabilityService.polynomial_fit_derivatives(
                IntervalSystemFactory.create(two_gaps=True), 1
            )
