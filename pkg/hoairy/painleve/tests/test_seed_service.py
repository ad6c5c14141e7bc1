from django.test import SimpleTestCase
from scipy.special import airy

from hoairy.painleve.services.seed_service import SeedService
from hoairy.utils.exception_utils import SeedTooLarge, WeightCollision


class TestSeedFromAsymptotics(SimpleTestCase):
    def test_seed_classicalCase_isAiryAndDerivative(self):
        seed = SeedService.seed_from_asymptotics(1, [0.0], [1.0], 8.0)
        ai, aip, _, _ = airy(8.0)
        self.assertAlmostEqual(ai, seed[0, 0].real, delta=1e-13)
        self.assertAlmostEqual(aip, seed[0, 1].real, delta=1e-13)
        self.assertEqual(0.0, seed[0, 0].imag)

    def test_seed_increasingWeights_givesImaginaryComponent(self):
        seed = SeedService.seed_from_asymptotics(1, [1.0, -1.0], [0.2, 0.5], 9.0)
        self.assertEqual(0.0, seed[0, 0].real)
        self.assertGreater(seed[0, 0].imag, 0.0)
        self.assertEqual(0.0, seed[1, 0].imag)
        self.assertGreater(seed[1, 0].real, 0.0)

    def test_seed_scalesWithRootOfWeightDifference(self):
        full = SeedService.seed_from_asymptotics(2, [0.0], [1.0], 14.0)
        quarter = SeedService.seed_from_asymptotics(2, [0.0], [0.25], 14.0)
        self.assertAlmostEqual(0.5 * full[0, 3].real, quarter[0, 3].real, delta=1e-20)

    def test_seed_equalNeighbourWeights_raisesWeightCollision(self):
        with self.assertRaises(WeightCollision):
            SeedService.seed_from_asymptotics(1, [1.0, 0.0], [0.5, 0.5], 9.0)

    def test_seed_smallTMax_raisesSeedTooLarge(self):
        with self.assertRaises(SeedTooLarge):
            SeedService.seed_from_asymptotics(1, [0.0], [1.0], 1.0)


class TestResolveTMax(SimpleTestCase):
    def test_resolveTMax_classicalCase_keepsDefault(self):
        self.assertEqual(8.0, SeedService.resolve_t_max(1, [0.0], [1.0]))

    def test_resolveTMax_lowThreshold_raisesInUnitSteps(self):
        self.assertEqual(9.0, SeedService.resolve_t_max(1, [0.0, -2.0], [0.8, 0.4]))

    def test_resolveTMax_nTwo_endsWithSmallSeed(self):
        t_max = SeedService.resolve_t_max(2, [0.0], [0.9])
        self.assertGreater(t_max, 6.0)
        self.assertLessEqual(SeedService.largest_seed(2, [0.0], t_max), 1e-6)

    def test_resolveTMax_fixedTooSmall_raisesSeedTooLarge(self):
        with self.assertRaises(SeedTooLarge):
            SeedService.resolve_t_max(1, [0.0], [1.0], t_max=3.0)
