from hoairy.core.artifacts import Artifact
from hoairy.core.commands import HoairyCommand
from hoairy.fredholm.config import NYSTROM_NODES, SPECTRUM_TOLERANCE, Z_NODES
from hoairy.fredholm.services.nystrom_service import NystromService


class Command(HoairyCommand):
    help = "Fredholm determinant F_n(x + t, alpha) by Nystrom discretization"
    subcommand = "det"

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int)
        parser.add_argument("--x", help="Thresholds x_1 > ... > x_k")
        parser.add_argument("--alpha", help="Weights alpha_1..alpha_k")
        parser.add_argument("--t", type=float)
        parser.add_argument("--nodes", type=int, help="Quadrature nodes per interval")
        parser.add_argument(
            "--hard-cutoff",
            action="store_true",
            default=None,
            help="Truncate (x_1 + t, inf) instead of mapping it to [0, 1)",
        )
        parser.add_argument(
            "--self-check",
            action="store_true",
            default=None,
            help="Double the Nystrom and kernel node counts",
        )
        parser.add_argument(
            "--spectrum",
            action="store_true",
            default=None,
            help="Report the eigenvalues of the discretized operator",
        )

    def run(self, config):
        system = config.interval_system()
        nodes, z_nodes = config.nodes, None
        if config.self_check:
            nodes = 2 * (nodes or NYSTROM_NODES)
            z_nodes = 2 * Z_NODES
        report = NystromService.gen_fn_report(
            system, config.n, nodes, config.hard_cutoff, z_nodes
        )
        result = {
            "F": report.value,
            "log_F": report.log_value,
            "error_estimate": report.error_estimate,
            "nodes": report.nodes,
            "truncation": report.truncation,
        }
        passed = True
        if config.spectrum:
            nystrom = NystromService.build_nystrom(
                system, config.n, nodes, config.hard_cutoff, z_nodes
            )
            eigenvalues = NystromService.spectrum(nystrom)
            inside = bool(
                eigenvalues[0] >= -SPECTRUM_TOLERANCE
                and eigenvalues[-1] <= 1 + SPECTRUM_TOLERANCE
            )
            result["spectrum"] = {
                "min": float(eigenvalues[0]),
                "max": float(eigenvalues[-1]),
                "inside_unit_interval": inside,
                "largest": [float(value) for value in eigenvalues[::-1][:10]],
            }
            passed = inside
        return Artifact(config=config, result=result, passed=passed)
