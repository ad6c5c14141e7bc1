import math

from django.test import SimpleTestCase

from hoairy.fredholm.intervals import IntervalSystem
from hoairy.fredholm.tests.factories import IntervalSystemFactory
from hoairy.utils.exception_utils import ConfigError


class TestIntervalSystem(SimpleTestCase):
    def test_intervals_withShift_startAtInfinityAndMoveWithT(self):
        system = IntervalSystemFactory.create(
            thresholds=(1.0, 0.0, -2.0), weights=(1.0, 0.5, 0.25), shift=0.5
        )
        self.assertEqual(
            [(1.5, math.inf), (0.5, 1.5), (-1.5, 0.5)], system.intervals()
        )

    def test_weightDifferences_lastWeight_isDifferencedAgainstZero(self):
        system = IntervalSystemFactory.create(
            thresholds=(1.0, 0.0), weights=(0.75, 0.5)
        )
        self.assertEqual((0.25, 0.5), system.weight_differences())

    def test_create_increasingThresholds_raisesConfigError(self):
        with self.assertRaises(ConfigError):
            IntervalSystem.create((0.0, 1.0), (1.0, 1.0))

    def test_create_equalThresholds_raisesConfigError(self):
        with self.assertRaises(ConfigError):
            IntervalSystem.create((0.0, 0.0), (1.0, 1.0))

    def test_create_weightOutsideUnitInterval_raisesConfigError(self):
        for weight in (-0.1, 1.5):
            with self.assertRaises(ConfigError):
                IntervalSystem.create((0.0,), (weight,))

    def test_create_weightCountMismatch_raisesConfigError(self):
        with self.assertRaises(ConfigError):
            IntervalSystem.create((1.0, 0.0), (1.0,))

    def test_create_nonFiniteThreshold_raisesConfigError(self):
        with self.assertRaises(ConfigError):
            IntervalSystem.create((math.nan,), (1.0,))

    def test_create_weightOne_isAllowed(self):
        system = IntervalSystemFactory.create(two_gaps=True)
        self.assertEqual(2, system.k)

    def test_withFirstThreshold_belowSecond_raisesConfigError(self):
        system = IntervalSystemFactory.create(two_gaps=True)
        with self.assertRaises(ConfigError):
            system.with_first_threshold(-2.0)

    def test_withShift_keepsThresholdsAndWeights(self):
        system = IntervalSystemFactory.create(two_gaps=True).with_shift(2.0)
        self.assertEqual((0.5, -1.0), system.thresholds)
        self.assertEqual(2.0, system.shift)
