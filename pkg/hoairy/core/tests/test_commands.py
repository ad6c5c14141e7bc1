import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest.mock import patch

from django.core.management import call_command
from django.test import SimpleTestCase

from hoairy.fredholm.services.nystrom_service import NystromService
from hoairy.utils.exception_utils import NumericalBreakdown


class TestHoairyCommand(SimpleTestCase):
    def test_handle_outPath_writesArtifactToFile(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "det.json"
            out = StringIO()
            call_command("det", n=1, x="0", alpha="0", out=str(path), stdout=out)
            self.assertEqual("", out.getvalue())
            document = json.loads(path.read_text(encoding="UTF-8"))
        self.assertEqual(str(path), document["config"]["out"])

    def test_handle_unwritableOutPath_exitsWithConfigError(self):
        with self.assertRaises(SystemExit) as context:
            call_command(
                "det", n=1, x="0", alpha="0", out="/nonexistent/dir/det.json",
                stdout=StringIO(), stderr=StringIO(),
            )
        self.assertEqual(2, context.exception.code)

    def test_handle_numericalFailure_writesJsonErrorAndExitsThree(self):
        err = StringIO()
        with patch.object(
            NystromService,
            "gen_fn_report",
            side_effect=NumericalBreakdown("LU factorization failed", {"nodes": 48}),
        ):
            with self.assertRaises(SystemExit) as context:
                call_command("det", n=1, x="0", alpha="1", stdout=StringIO(), stderr=err)
        self.assertEqual(3, context.exception.code)
        self.assertEqual(
            {
                "error": "NumericalBreakdown",
                "message": "LU factorization failed",
                "details": {"nodes": 48},
            },
            json.loads(err.getvalue()),
        )

    def test_handle_configFile_isReadFromDisk(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "run.json"
            path.write_text(json.dumps({"alpha": [0.0], "t": 0.5}), encoding="UTF-8")
            out = StringIO()
            call_command("det", n=1, x="0", alpha="0", config=str(path), stdout=out)
        document = json.loads(out.getvalue())
        self.assertEqual(0.5, document["config"]["t"])
