import cmath
from unittest.mock import MagicMock, patch

import numpy as np
from django.test import SimpleTestCase
from scipy.special import airy

from hoairy.airy.services.airy_service import AiryService
from hoairy.painleve.datatypes import CompiledRHS
from hoairy.painleve.services.integration_service import IntegrationService
from hoairy.painleve.services.oracle_service import OracleService
from hoairy.painleve.services.seed_service import SeedService
from hoairy.painleve.services.tracy_widom_service import TracyWidomService
from hoairy.utils.exception_utils import ConfigError, SeedTooLarge

HASTINGS_MCLEOD_AT_ZERO = 0.3670615515

ACCEPTANCE_CASES = (
    (1, (0.0,), (1.0,)),
    (1, (-1.0,), (0.5,)),
    (1, (1.0, -1.0), (0.3, 0.7)),
    (1, (0.0, -2.0), (0.8, 0.4)),
    (2, (0.0,), (0.9,)),
    (2, (1.0, -1.0), (0.6, 0.3)),
)


def reference_airy(n: int, argument: float) -> float:
    if n == 1:
        return float(airy(argument)[0])
    return AiryService.saddle_quadrature(n, argument).value


class TestHastingsMcLeod(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.grid = IntegrationService.solve(1, [0.0], [1.0])

    def test_solve_classicalCase_matchesKnownValueAtZero(self):
        self.assertAlmostEqual(
            HASTINGS_MCLEOD_AT_ZERO, self.grid.u_at(0.0)[0].real, delta=1e-7
        )

    def test_solve_classicalCase_matchesCollocationOracle(self):
        oracle = OracleService.hastings_mcleod_bvp()
        for t in (0.0, 1.0, 2.5, 4.0):
            self.assertAlmostEqual(
                float(oracle(t)[0]), self.grid.u_at(t)[0].real, delta=1e-6
            )

    def test_solve_classicalCase_trustWindowCoversGrid(self):
        self.assertGreaterEqual(self.grid.t_max, 8.0)
        self.assertEqual(0.0, self.grid.t_trust)
        self.assertTrue(np.all(self.grid.trusted()))

    def test_solve_classicalCase_gridIsStrictlyDescending(self):
        self.assertTrue(np.all(np.diff(self.grid.t) < 0))

    def test_solve_nearTMax_matchesAiryAsymptotics(self):
        ratio = self.grid.u_at(7.0)[0].real / airy(7.0)[0]
        self.assertAlmostEqual(1.0, ratio, delta=1e-4)

    def test_solve_largerTMax_movesSolutionBelowTolerance(self):
        later = IntegrationService.solve(1, [0.0], [1.0], t_max=9.0)
        self.assertLess(abs(later.u_at(0.0)[0] - self.grid.u_at(0.0)[0]), 1e-6)

    def test_solve_tightenedTolerance_movesSolutionBelowTolerance(self):
        tight = IntegrationService.solve(1, [0.0], [1.0], rtol=5e-12, atol=5e-17)
        difference = np.max(np.abs(tight.u - self.grid.u))
        self.assertLess(difference, 1e-7)


class TestIntegrate(SimpleTestCase):
    def test_solve_mixedWeights_keepsRealityPattern(self):
        grid = IntegrationService.solve(1, [1.0, -1.0], [0.3, 0.6])
        self.assertEqual(("imaginary", "real"), grid.reality)
        trusted = grid.u[grid.trusted()]
        first, second = trusted[:, 0], trusted[:, 1]
        self.assertLessEqual(np.max(np.abs(first.real)), 1e-6 * np.max(np.abs(first)))
        self.assertLessEqual(np.max(np.abs(second.imag)), 1e-6 * np.max(np.abs(second)))
        self.assertGreater(np.max(np.abs(first)), 0.0)

    def test_solve_smallWeight_isLinearizedAiry(self):
        epsilon = 1e-4
        grid = IntegrationService.solve(1, [0.0], [epsilon])
        linear = np.sqrt(epsilon) * airy(grid.t)[0]
        self.assertLess(np.max(np.abs(grid.u[:, 0] - linear)), 10 * epsilon**1.5)

    def test_solve_addedFarComponent_leavesFirstComponent(self):
        epsilon = 1e-12
        single = IntegrationService.solve(1, [0.0], [0.5], t_max=9.0)
        double = IntegrationService.solve(
            1, [0.0, -1.0], [0.5 + epsilon, epsilon], t_max=9.0
        )
        self.assertLess(np.max(np.abs(single.u[:, 0] - double.u[:, 0])), 1e-6)

    def test_solve_nTwo_trustWindowReachesZero(self):
        grid = IntegrationService.solve(2, [0.0], [0.9])
        self.assertEqual(0.0, grid.t_trust)
        self.assertEqual(0.0, np.max(np.abs(grid.u.imag)))

    def test_reportGrid_inverted_raisesConfigError(self):
        with self.assertRaises(ConfigError):
            IntegrationService.report_grid(0.0, 1.0)

    def test_realityPattern_followsWeightSteps(self):
        self.assertEqual(
            ("real", "imaginary", "real"),
            IntegrationService.reality_pattern([0.9, 0.2, 0.5]),
        )


class TestTMaxConvergence(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.grids = {case: IntegrationService.solve(*case) for case in ACCEPTANCE_CASES}

    def test_solve_acceptanceCases_followAiryAsymptoticsBelowTMax(self):
        for (n, x, alpha), grid in self.grids.items():
            t = grid.t_max - 1.0
            u = grid.u_at(t)
            differences = SeedService.weight_differences(alpha)
            for j, (x_j, difference) in enumerate(zip(x, differences)):
                with self.subTest(n=n, x=x, alpha=alpha, component=j):
                    expected = cmath.sqrt(difference) * reference_airy(n, t + x_j)
                    self.assertLess(abs(u[j] / expected - 1.0), 1e-4)

    def test_solve_acceptanceCases_raisedTMax_movesResultBelowTolerance(self):
        for (n, x, alpha), grid in self.grids.items():
            with self.subTest(n=n, x=x, alpha=alpha):
                raised = IntegrationService.solve(n, x, alpha, t_max=grid.t_max + 1.0)
                self.assertEqual(0.0, grid.t_trust)
                self.assertEqual(0.0, raised.t_trust)
                self.assertLess(np.max(np.abs(raised.u_at(0.0) - grid.u_at(0.0))), 1e-6)
                self.assertAlmostEqual(
                    TracyWidomService.tw_integral(grid),
                    TracyWidomService.tw_integral(raised),
                    delta=1e-6,
                )


class TestTMaxLoop(SimpleTestCase):
    def test_solve_unsettledShift_raisesTMaxByOne(self):
        start = SeedService.resolve_t_max(1, [0.0], [1.0])
        with patch.object(IntegrationService, "t_max_shift", side_effect=[1e-3, 0.0]):
            grid = IntegrationService.solve(1, [0.0], [1.0])
        self.assertEqual(start + 1.0, grid.t_max)

    def test_solve_fixedTMax_skipsConvergenceLoop(self):
        with patch.object(IntegrationService, "t_max_shift") as shift:
            grid = IntegrationService.solve(1, [0.0], [1.0], t_max=9.0)
        shift.assert_not_called()
        self.assertEqual(9.0, grid.t_max)

    def test_solve_neverSettles_raisesSeedTooLarge(self):
        with patch.object(IntegrationService, "integrate", return_value=MagicMock()):
            with patch.object(IntegrationService, "t_max_shift", return_value=1.0):
                with self.assertRaises(SeedTooLarge):
                    IntegrationService.solve(1, [0.0], [1.0])

    def test_tMaxShift_sameGrid_isZero(self):
        grid = IntegrationService.solve(1, [0.0], [0.5], t_max=8.0)
        self.assertEqual(0.0, IntegrationService.t_max_shift(grid, grid))


class TestAbsoluteTolerances(SimpleTestCase):
    def test_absoluteTolerances_tinySeed_isCappedPerComponent(self):
        rhs = CompiledRHS(n=1, k=3, arguments=(), function=None)
        seed = np.array([[1e-10, -2e-10], [1e-3, 1e-3], [0.0, 0.0]], dtype=complex)
        tolerances = IntegrationService.absolute_tolerances(rhs, seed, 1e-11, 1e-16)
        np.testing.assert_allclose(
            [2e-21, 2e-21, 1e-16, 1e-16, 1e-300, 1e-300], tolerances, rtol=1e-12
        )
