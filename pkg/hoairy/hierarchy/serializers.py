from typing import Any, Dict, List

from hoairy.diffring.ring import MatDiffPoly
from hoairy.diffring.serializers import (
    DiffPolyJsonSerializer,
    DiffPolyLatexPrinter,
    DiffPolyTextSerializer,
)
from hoairy.hierarchy.datatypes import BMatrix, HierarchyMember, IdentityReport, LenardChain


class HierarchyMemberSerializer:
    @staticmethod
    def to_text(member: HierarchyMember) -> str:
        lines = [f"# vector Painleve II hierarchy, n={member.n}, k={member.k}"]
        for component, (lhs, rhs) in enumerate(zip(member.lhs, member.rhs), start=1):
            lines.append(
                f"[{component}] {DiffPolyTextSerializer.dumps(lhs)} = "
                f"{DiffPolyTextSerializer.dumps(rhs)}"
            )
        return "\n".join(lines)

    @staticmethod
    def to_json(member: HierarchyMember) -> Dict[str, Any]:
        return {
            "n": member.n,
            "k": member.k,
            "order": member.order,
            "lhs": DiffPolyJsonSerializer.dumps_vector(member.lhs),
            "rhs": DiffPolyJsonSerializer.dumps_vector(member.rhs),
            "text": [
                DiffPolyTextSerializer.dumps(entry) for entry in member.residual()
            ],
        }

    @staticmethod
    def to_latex(member: HierarchyMember) -> str:
        rows = [
            f"{DiffPolyLatexPrinter.to_latex(lhs)} &= {DiffPolyLatexPrinter.to_latex(rhs)}"
            for lhs, rhs in zip(member.lhs, member.rhs)
        ]
        return "\\begin{aligned}\n" + " \\\\\n".join(rows) + "\n\\end{aligned}"


class LaxPairSerializer:
    @staticmethod
    def matrix_text(matrix: MatDiffPoly) -> List[List[str]]:
        return [[DiffPolyTextSerializer.dumps(entry) for entry in row] for row in matrix.rows()]

    @classmethod
    def to_json(
        cls, chain: LenardChain, matrices: List[MatDiffPoly], b: BMatrix
    ) -> Dict[str, Any]:
        return {
            "n": chain.n,
            "k": chain.k,
            "A": [
                {
                    "power": 2 * chain.n - j,
                    "text": cls.matrix_text(matrix),
                    "terms": DiffPolyJsonSerializer.dumps_matrix(matrix),
                }
                for j, matrix in enumerate(matrices)
            ],
            "B": {
                "linear": cls.matrix_text(b.linear),
                "constant": cls.matrix_text(b.constant),
            },
        }


class IdentityReportSerializer:
    @staticmethod
    def to_text(reports: List[IdentityReport]) -> str:
        lines = []
        for report in reports:
            for check in report.checks:
                status = "ok" if check.passed else f"FAILED residual {check.residual}"
                lines.append(f"{check.name}: {status}")
        if all(report.passed for report in reports):
            lines.append("all identities exact")
        return "\n".join(lines)
