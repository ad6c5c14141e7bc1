from hoairy.core.artifacts import Artifact
from hoairy.core.commands import HoairyCommand
from hoairy.painleve.config import ROUTE_TOLERANCE
from hoairy.painleve.services.tracy_widom_service import TracyWidomService


class Command(HoairyCommand):
    help = "Compare log F from the Fredholm determinant with the Painleve integral"
    subcommand = "verify_tw"

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int)
        parser.add_argument("--k", type=int)
        parser.add_argument("--x")
        parser.add_argument("--alpha")
        parser.add_argument("--tmax", dest="t_max", type=float)
        parser.add_argument("--nodes", type=int)
        parser.add_argument("--rtol", type=float)
        parser.add_argument("--atol", type=float)

    def run(self, config):
        system = config.interval_system()
        comparison = TracyWidomService.verify_route(
            config.n,
            system.thresholds,
            system.weights,
            t_max=config.t_max,
            nodes=config.nodes,
            rtol=config.rtol,
            atol=config.atol,
        )
        return Artifact(
            config=config,
            result={
                "log_F_fredholm": comparison.log_F_fredholm,
                "log_F_painleve": comparison.log_F_painleve,
                "abs_diff": comparison.abs_diff,
                "tolerance": ROUTE_TOLERANCE,
                "trust_window": list(comparison.trust_window),
                "t_max": comparison.t_max,
            },
            passed=comparison.passed,
        )
