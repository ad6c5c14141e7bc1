import logging

from celery import group

from hoairy.core.artifacts import Artifact
from hoairy.core.commands import HoairyCommand
from hoairy.fredholm.tasks import gen_fn_point
from hoairy.utils.exception_utils import ConfigError
from hoairy.utils.shortcuts import uniform_grid

log = logging.getLogger(__name__)


class Command(HoairyCommand):
    help = "Sweep F_n over t or x_1 and write the values as CSV"
    subcommand = "tabulate"
    default_format = "csv"

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int)
        parser.add_argument("--x")
        parser.add_argument("--alpha")
        parser.add_argument("--over", choices=["t", "x1"])
        parser.add_argument("--from", dest="t_from", type=float)
        parser.add_argument("--to", dest="t_to", type=float)
        parser.add_argument("--step", dest="t_step", type=float)
        parser.add_argument("--t", type=float)
        parser.add_argument("--nodes", type=int)
        parser.add_argument("--hard-cutoff", action="store_true", default=None)

    def run(self, config):
        config.require("t_from", "t_to", "t_step")
        system = config.interval_system()
        grid = uniform_grid(config.t_from, config.t_to, config.t_step)
        signatures = []
        for value in grid:
            if config.over == "t":
                point = system.with_shift(value)
            else:
                if system.k > 1 and not value > system.thresholds[1]:
                    raise ConfigError(
                        "x_1 must stay above x_2 over the sweep",
                        {"x1": value, "x2": system.thresholds[1]},
                    )
                point = system.with_first_threshold(value)
            signatures.append(
                gen_fn_point.s(
                    config.n,
                    list(point.thresholds),
                    list(point.weights),
                    point.shift,
                    config.nodes,
                    bool(config.hard_cutoff),
                )
            )
        log.info("tabulate: %d points over %s", len(signatures), config.over)
        results = group(signatures).apply_async().join()
        rows = [[row[config.over], row["F"]] for row in results]
        return Artifact(config=config, columns=[config.over, "F"], rows=rows)
