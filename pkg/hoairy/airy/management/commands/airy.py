from hoairy.airy.services.airy_service import AiryService
from hoairy.core.artifacts import Artifact
from hoairy.core.commands import HoairyCommand
from hoairy.utils.shortcuts import uniform_grid


class Command(HoairyCommand):
    help = "Tabulate the higher order Airy function Ai_n or one of its derivatives"
    subcommand = "airy"
    default_format = "csv"

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int)
        parser.add_argument("--from", dest="t_from", type=float)
        parser.add_argument("--to", dest="t_to", type=float)
        parser.add_argument("--step", dest="t_step", type=float)
        parser.add_argument("--deriv", type=int)
        parser.add_argument(
            "--imag",
            action="store_true",
            default=None,
            help="Add the imaginary residual of the quadrature as a column",
        )

    def run(self, config):
        config.require("t_from", "t_to", "t_step")
        columns = ["x", "value"] + (["imag_residual"] if config.imag else [])
        rows = []
        for x in uniform_grid(config.t_from, config.t_to, config.t_step):
            result = AiryService.quadrature(config.n, x, config.deriv)
            row = [x, result.value]
            if config.imag:
                row.append(result.imag_residual)
            rows.append(row)
        return Artifact(config=config, columns=columns, rows=rows)
