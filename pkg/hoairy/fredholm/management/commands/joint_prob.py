from hoairy.core.artifacts import Artifact
from hoairy.core.commands import HoairyCommand
from hoairy.fredholm.intervals import IntervalSystem
from hoairy.fredholm.services.joint_probability_service import (
    JointProbabilityService,
)


class Command(HoairyCommand):
    help = "Joint law P(zeta_(m_1) < x_1, ..., zeta_(m_k) < x_k) by alpha-differencing"
    subcommand = "joint_prob"

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int)
        parser.add_argument("--x")
        parser.add_argument("--orders", help="m_1 < ... < m_k")
        parser.add_argument("--t", type=float)
        parser.add_argument("--d-alpha", dest="d_alpha", type=float)
        parser.add_argument("--nodes", type=int)

    def run(self, config):
        config.require("x", "orders")
        system = IntervalSystem.create(config.x, [1.0] * len(config.x), config.t)
        result = JointProbabilityService.joint_prob(
            system, config.n, config.orders, config.d_alpha, config.nodes
        )
        return Artifact(
            config=config,
            result={
                "probability": result.value,
                "error_estimate": result.error_estimate,
                "terms": result.terms,
            },
        )
