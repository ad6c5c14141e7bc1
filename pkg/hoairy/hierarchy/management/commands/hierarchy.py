from hoairy.core.artifacts import Artifact
from hoairy.core.commands import HoairyCommand
from hoairy.hierarchy.serializers import HierarchyMemberSerializer
from hoairy.hierarchy.services.lenard_service import LenardService


class Command(HoairyCommand):
    help = "Print the vector Painleve II hierarchy member (L+ L-)^n u = -diag(x_j + t) u"
    subcommand = "hierarchy"
    default_format = "text"

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int)
        parser.add_argument("--k", type=int)

    def run(self, config):
        config.require("k")
        member = LenardService.hierarchy_member(config.n, config.k)
        member.check_leading_terms()
        if config.format == "latex":
            text = HierarchyMemberSerializer.to_latex(member)
        else:
            text = HierarchyMemberSerializer.to_text(member)
        return Artifact(
            config=config, result=HierarchyMemberSerializer.to_json(member), text=text
        )
