import json

from hoairy.core.artifacts import Artifact
from hoairy.core.commands import HoairyCommand
from hoairy.hierarchy.serializers import IdentityReportSerializer, LaxPairSerializer
from hoairy.hierarchy.services.lax_chain_service import LaxChainService
from hoairy.hierarchy.services.lax_verification_service import (
    LaxVerificationService,
)
from hoairy.utils.exception_utils import ConfigError


class Command(HoairyCommand):
    help = "Check the Lax pair compatibility and convolution identities exactly"
    subcommand = "laxcheck"
    default_format = "text"

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int)
        parser.add_argument("--k", type=int)
        parser.add_argument("--export", help="Write A(lambda) and B(lambda) as JSON")

    def run(self, config):
        config.require("k")
        chain = LaxChainService.lax_chain(config.n, config.k)
        reports = [
            LaxVerificationService.verify_compatibility(chain, raise_on_failure=False),
            LaxVerificationService.verify_convolutions(chain, raise_on_failure=False),
        ]
        if config.export:
            self.export(chain, config.export)
        passed = all(report.passed for report in reports)
        return Artifact(
            config=config,
            result={
                "passed": passed,
                "reports": [report.as_dict() for report in reports],
            },
            text=IdentityReportSerializer.to_text(reports),
            passed=passed,
        )

    @staticmethod
    def export(chain, path: str):
        document = LaxPairSerializer.to_json(
            chain,
            LaxChainService.lax_matrices(chain),
            LaxChainService.b_matrix(chain.k),
        )
        try:
            with open(path, "w", encoding="UTF-8") as export_file:
                json.dump(document, export_file, indent=2, sort_keys=True)
        except OSError as error:
            raise ConfigError("Could not write the export", {"path": path}) from error
