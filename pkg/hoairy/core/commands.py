import json
import logging
from typing import Any, Dict

from django.core.management.base import BaseCommand

from hoairy.core.artifacts import Artifact
from hoairy.core.run_config import RunConfig
from hoairy.utils.exception_utils import (
    EXIT_CHECK_FAILED,
    ConfigError,
    HoairyException,
)

log = logging.getLogger(__name__)


class HoairyCommand(BaseCommand):
    """
    Base of every hoairy subcommand: resolves the RunConfig, runs the command,
    writes the artifact to stdout or --out, and maps library errors to a JSON
    record on stderr plus the exit code of their family.
    """

    subcommand = ""
    default_format = "json"

    def add_arguments(self, parser):
        parser.add_argument("--config", help="JSON file with run settings")
        parser.add_argument("--out", help="Write the artifact here instead of stdout")
        parser.add_argument("--format", choices=["csv", "json", "text", "latex"])
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def defaults(self) -> Dict[str, Any]:
        return {"format": self.default_format}

    def run(self, config: RunConfig) -> Artifact:
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(
                self.subcommand or self.__module__.rsplit(".", 1)[-1],
                options,
                defaults=self.defaults(),
            )
            artifact = self.run(config)
            self.write_artifact(artifact)
        except HoairyException as error:
            log.info("%s failed: %s", self.subcommand, error.message)
            self.stderr.write(json.dumps(error.as_dict(), sort_keys=True, default=str))
            raise SystemExit(error.exit_code)
        if not artifact.passed:
            raise SystemExit(EXIT_CHECK_FAILED)

    def write_artifact(self, artifact: Artifact):
        rendered = artifact.render()
        path = artifact.config.output_path()
        if path is None:
            self.stdout.write(rendered)
            return
        try:
            path.write_text(rendered + "\n", encoding="UTF-8")
        except OSError as error:
            raise ConfigError("Could not write the artifact", {"path": str(path)}) from error
        log.info("wrote %s", path)
