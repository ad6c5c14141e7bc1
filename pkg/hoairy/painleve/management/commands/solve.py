from hoairy.core.artifacts import Artifact
from hoairy.core.commands import HoairyCommand
from hoairy.painleve.services.integration_service import IntegrationService
from hoairy.painleve.services.tracy_widom_service import TracyWidomService


class Command(HoairyCommand):
    help = "Integrate the vector Painleve II hierarchy backwards from its Airy asymptotics"
    subcommand = "solve"
    default_format = "csv"

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int)
        parser.add_argument("--k", type=int)
        parser.add_argument("--x")
        parser.add_argument("--alpha")
        parser.add_argument("--tmin", dest="t_min", type=float)
        parser.add_argument("--tmax", dest="t_max", type=float)
        parser.add_argument("--rtol", type=float)
        parser.add_argument("--atol", type=float)
        parser.add_argument(
            "--profile",
            action="store_true",
            default=None,
            help="Add log F(x + t) on the trust window as a column",
        )

    def run(self, config):
        system = config.interval_system()
        grid = IntegrationService.solve(
            config.n,
            system.thresholds,
            system.weights,
            t_min=config.t_min,
            t_max=config.t_max,
            rtol=config.rtol,
            atol=config.atol,
        )
        columns = ["t"]
        for j in range(1, grid.k + 1):
            columns += [f"re_u{j}", f"im_u{j}"]
        columns.append("trusted")
        if config.profile:
            columns.append("log_F")
            # Ascending in t, so the reverse of the trusted head of the grid.
            _, log_f = TracyWidomService.tw_profile(grid)
            log_f = log_f[::-1]
        rows = []
        for index, t in enumerate(grid.t):
            row = [float(t)]
            for value in grid.u[index]:
                row += [float(value.real), float(value.imag)]
            trusted = bool(t >= grid.t_trust)
            row.append(int(trusted))
            if config.profile:
                row.append(float(log_f[index]) if trusted else "")
            rows.append(row)
        return Artifact(config=config, columns=columns, rows=rows)
