import json
from io import StringIO

from django.core.management import call_command
from django.test import SimpleTestCase


class TestSolveCommand(SimpleTestCase):
    def test_solve_classicalCase_writesComponentColumns(self):
        out = StringIO()
        call_command("solve", n=1, x="0", alpha="1", stdout=out)
        lines = out.getvalue().strip().splitlines()
        self.assertEqual("t,re_u1,im_u1,trusted", lines[3])
        self.assertTrue(lines[4].startswith("8,"))
        last = lines[-1].split(",")
        self.assertEqual("0", last[0])
        self.assertAlmostEqual(0.3670615515, float(last[1]), delta=1e-7)
        self.assertEqual("1", last[3])

    def test_solve_profile_addsLogDistributionColumn(self):
        out = StringIO()
        call_command("solve", n=1, x="0", alpha="1", tmin=0.0, profile=True, stdout=out)
        lines = out.getvalue().strip().splitlines()
        self.assertEqual("t,re_u1,im_u1,trusted,log_F", lines[3])
        log_f_at_zero = float(lines[-1].split(",")[4])
        self.assertLess(log_f_at_zero, 0.0)

    def test_solve_equalWeights_exitsWithConfigError(self):
        err = StringIO()
        with self.assertRaises(SystemExit) as context:
            call_command(
                "solve", n=1, x="1,0", alpha="0.5,0.5", stdout=StringIO(), stderr=err
            )
        self.assertEqual(2, context.exception.code)
        self.assertEqual("WeightCollision", json.loads(err.getvalue())["error"])


class TestVerifyTwCommand(SimpleTestCase):
    def test_verifyTw_classicalCase_passes(self):
        out = StringIO()
        call_command("verify_tw", n=1, k=1, x="0", alpha="1", stdout=out)
        result = json.loads(out.getvalue())["result"]
        self.assertLessEqual(result["abs_diff"], 1e-4)
        self.assertEqual([0.0, 8.0], result["trust_window"])
        self.assertEqual(
            set(result),
            {"log_F_fredholm", "log_F_painleve", "abs_diff", "tolerance", "trust_window", "t_max"},
        )
