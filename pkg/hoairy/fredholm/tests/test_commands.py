import json
from io import StringIO
from unittest.mock import patch

from django.core.management import call_command
from django.test import SimpleTestCase

from hoairy.fredholm.services.nystrom_service import NystromService


def run_json(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return json.loads(out.getvalue())


class TestDetCommand(SimpleTestCase):
    def test_det_zeroWeight_isOne(self):
        document = run_json("det", n=1, x="0", alpha="0")
        self.assertEqual(1.0, document["result"]["F"])
        self.assertEqual(0.0, document["result"]["log_F"])
        self.assertEqual("det", document["config"]["subcommand"])
        self.assertEqual(1, document["schema_version"])

    def test_det_spectrum_reportsUnitInterval(self):
        document = run_json("det", n=2, x="-1", alpha="1", nodes=24, spectrum=True)
        spectrum = document["result"]["spectrum"]
        self.assertTrue(spectrum["inside_unit_interval"])
        self.assertLess(spectrum["max"], 1.0)

    def test_det_selfCheck_doublesNodes(self):
        document = run_json("det", n=1, x="-1", alpha="1", nodes=16, self_check=True)
        self.assertEqual(32, document["result"]["nodes"])

    def test_det_increasingThresholds_exitsWithConfigError(self):
        err = StringIO()
        with self.assertRaises(SystemExit) as context:
            call_command("det", n=1, x="0,1", alpha="1,1", stdout=StringIO(), stderr=err)
        self.assertEqual(2, context.exception.code)
        self.assertEqual("ConfigError", json.loads(err.getvalue())["error"])

    def test_det_configFile_isOverriddenByFlags(self):
        with patch.object(
            NystromService, "gen_fn", return_value=0.5
        ) as gen_fn, patch(
            "hoairy.core.run_config.RunConfig.read_file",
            return_value={"n": 2, "x": [0.0], "alpha": [0.5], "t": 1.0},
        ):
            document = run_json("det", n=1, x="0", alpha="0.5", config="run.json")
        self.assertEqual(1, document["config"]["n"])
        self.assertEqual(1.0, document["config"]["t"])
        self.assertEqual(1, gen_fn.call_args_list[0].args[1])


class TestTabulateCommand(SimpleTestCase):
    def test_tabulate_overT_writesOrderedCsv(self):
        out = StringIO()
        call_command(
            "tabulate", n=1, x="-1", alpha="1", t_from=-1.0, t_to=0.0, t_step=0.5,
            stdout=out,
        )
        lines = out.getvalue().strip().splitlines()
        self.assertEqual("t,F", lines[3])
        rows = [line.split(",") for line in lines[4:]]
        self.assertEqual(["-1", "-0.5", "0"], [row[0] for row in rows])
        values = [float(row[1]) for row in rows]
        self.assertEqual(sorted(values), values)

    def test_tabulate_overFirstThreshold_belowSecond_exitsWithConfigError(self):
        with self.assertRaises(SystemExit) as context:
            call_command(
                "tabulate", n=1, x="0,-1", alpha="1,0.5", over="x1",
                t_from=-2.0, t_to=0.0, t_step=1.0, stdout=StringIO(), stderr=StringIO(),
            )
        self.assertEqual(2, context.exception.code)


class TestJointProbCommand(SimpleTestCase):
    def test_jointProb_largestPoint_equalsDet(self):
        probability = run_json("joint_prob", n=1, x="-1", orders="1")
        det = run_json("det", n=1, x="-1", alpha="1")
        self.assertEqual(det["result"]["F"], probability["result"]["probability"])
        self.assertEqual(1, probability["result"]["terms"])
