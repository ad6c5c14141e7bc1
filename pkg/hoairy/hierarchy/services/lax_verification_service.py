import logging

from hoairy.diffring.coefficients import I
from hoairy.diffring.ring import DiffPoly, Generator, MatDiffPoly, VecDiffPoly, dot
from hoairy.diffring.services.calculus_service import CalculusService
from hoairy.hierarchy.datatypes import HierarchyMember, IdentityReport, LenardChain
from hoairy.hierarchy.services.lax_chain_service import LaxChainService
from hoairy.hierarchy.services.lenard_service import LenardService

log = logging.getLogger(__name__)


def _commutator(left: MatDiffPoly, right: MatDiffPoly) -> MatDiffPoly:
    return left.matmul(right) - right.matmul(left)


def _derivative(matrix: MatDiffPoly) -> MatDiffPoly:
    return matrix.map(CalculusService.total_derivative)


def _corner(matrix: MatDiffPoly) -> DiffPoly:
    return matrix[0, 0]


def _top_row(matrix: MatDiffPoly) -> VecDiffPoly:
    return VecDiffPoly(matrix[0, j] for j in range(1, matrix.size))


def _left_column(matrix: MatDiffPoly) -> VecDiffPoly:
    return VecDiffPoly(matrix[i, 0] for i in range(1, matrix.size))


def _lower_block(matrix: MatDiffPoly) -> MatDiffPoly:
    return MatDiffPoly(
        [matrix[i, j] for j in range(1, matrix.size)] for i in range(1, matrix.size)
    )


class LaxVerificationService:
    @staticmethod
    def compatibility_coefficients(chain: LenardChain):
        """
        Coefficients of lambda^(2n-j), j = -1..2n, in dA/dt - dB/dlambda + [A, B].
        The j = -1 entry is the lambda^(2n+1) coefficient.
        """
        matrices = LaxChainService.lax_matrices(chain)
        b = LaxChainService.b_matrix(chain.k)
        top = 2 * chain.n
        coefficients = [_commutator(matrices[0], b.linear)]
        for j in range(top + 1):
            coefficient = _commutator(matrices[j], b.constant) + _derivative(
                matrices[j]
            )
            if j < top:
                coefficient = coefficient + _commutator(matrices[j + 1], b.linear)
            else:
                coefficient = coefficient - b.linear
            coefficients.append(coefficient)
        return coefficients

    @classmethod
    def verify_compatibility(
        cls, chain: LenardChain, raise_on_failure: bool = True
    ) -> IdentityReport:
        n, k = chain.n, chain.k
        top = 2 * n
        u = VecDiffPoly.u_vector(k)
        report = IdentityReport(n=n, k=k)

        leading = LaxChainService.leading_block(k)
        report.record("a0", chain.block(0).as_matrix() - leading.as_matrix())

        for j in range(1, top + 1):
            block = chain.block(j)
            sign = 1 if j % 2 == 0 else -1
            report.record(f"integrated11[{j}]", block.a11 - cls.integrated_a11(chain, j))
            report.record(f"recursion12[{j}]", block.a12 - cls.recursed_a12(chain, j))
            report.record(
                f"symmetry22[{j}]", block.a22 - block.a22.transpose().scale(sign)
            )

        coefficients = cls.compatibility_coefficients(chain)
        report.record("compatibility[lambda^%d]" % (top + 1), coefficients[0])
        for j in range(top):
            report.record(
                "compatibility[lambda^%d]" % (top - j), coefficients[j + 1]
            )

        member = LenardService.hierarchy_member(n, k)
        residual = member.residual()
        last = coefficients[-1]
        report.record("compatibility[lambda^0].11", _corner(last))
        report.record("compatibility[lambda^0].22", _lower_block(last))
        report.record(
            "compatibility[lambda^0].21", _left_column(last) + residual
        )
        report.record("compatibility[lambda^0].12", _top_row(last) + residual)

        for j in range(2, top + 1):
            previous = chain.block(j - 1).a21
            if j % 2 == 0:
                image = LenardService.lenard_minus(previous, u)
            else:
                image = LenardService.lenard_plus(previous, u)
            report.record(f"recursion[{j}]", chain.block(j).a21 + image)
        plus_last = LenardService.lenard_plus(chain.block(top).a21, u)
        report.record(
            f"recursion[{top + 1}]",
            LaxChainService.formal_next_a21(chain) + plus_last,
        )

        # -L+ a_2n^21 = -i m u with m = diag(x_j + t), on solutions of the member.
        closing = LaxChainService.formal_next_a21(chain) - member.rhs.scale(I)
        report.record("closing", closing.map(lambda p: cls.reduce_by_member(p, member)))

        chain_member = LaxChainService.chain_member(chain)
        report.record("double-construction", chain_member.lhs - member.lhs)
        member.check_leading_terms()

        log.info(
            "compatibility n=%d k=%d: %d checks, %d failures",
            n,
            k,
            len(report.checks),
            len(report.failures),
        )
        if raise_on_failure:
            report.raise_if_failed()
        return report

    @staticmethod
    def integrated_a11(chain: LenardChain, index: int) -> DiffPoly:
        """a_index^11 recovered from d/dt a^11 = -i (a^12 . u + a^21 . u)."""
        u = VecDiffPoly.u_vector(chain.k)
        block = chain.block(index)
        derivative = (dot(block.a12, u) + dot(block.a21, u)) * (-I)
        return CalculusService.formal_antiderivative(derivative)

    @staticmethod
    def recursed_a12(chain: LenardChain, index: int) -> VecDiffPoly:
        """a_index^12 = i D a^12 + a^11 u - (a^22)^T u, one block back."""
        u = VecDiffPoly.u_vector(chain.k)
        block = chain.block(index - 1)
        return (
            block.a12.map(CalculusService.total_derivative).scale(I)
            + u.scale(block.a11)
            - block.a22.transpose().apply(u)
        )

    @staticmethod
    def reduce_by_member(p: DiffPoly, member: HierarchyMember) -> DiffPoly:
        """p with every D^(2n) u_j replaced by its value from the member equation."""
        # i^(2n) = (-1)^n is the leading coefficient of each residual component.
        sign = 1 if member.n % 2 else -1
        for component, equation in enumerate(member.residual(), start=1):
            top = member.leading_generator(component)
            rest = equation - DiffPoly.generator(top) * (-sign)
            with_top, without = p.split_by(
                lambda monomial: any(g == top for g, _ in monomial)
            )
            if with_top.degree_in(top) > 1:
                raise ValueError(f"{top.name} enters non-linearly")
            p = without + with_top.partial(top) * (rest * sign)
        return p

    @staticmethod
    def integrated_a22(chain: LenardChain, index: int) -> MatDiffPoly:
        """a_index^22 recovered from d/dt a^22 = i (a^21 u^T + u a^12)."""
        u = VecDiffPoly.u_vector(chain.k)
        block = chain.block(index)
        derivative = (
            MatDiffPoly.outer(block.a21, u) + MatDiffPoly.outer(u, block.a12)
        ).scale(I)
        return derivative.map(CalculusService.formal_antiderivative)

    @classmethod
    def verify_convolutions(
        cls, chain: LenardChain, raise_on_failure: bool = True
    ) -> IdentityReport:
        """Both convolution formulas for the diagonal blocks, for l = 1..2n."""
        top = 2 * chain.n
        a11s = [chain.block(j).a11 for j in range(top + 1)]
        a12s = [chain.block(j).a12 for j in range(top + 1)]
        a21s = [chain.block(j).a21 for j in range(top + 1)]
        a22s = [chain.block(j).a22 for j in range(top + 1)]
        report = IdentityReport(n=chain.n, k=chain.k)
        for ell in range(1, top + 1):
            report.record(
                f"convolution11[{ell}]",
                a11s[ell] - LaxChainService.convolution_a11(a11s, a12s, a21s, ell),
            )
            report.record(
                f"convolution22[{ell}]",
                cls.integrated_a22(chain, ell)
                - LaxChainService.convolution_a22(a21s, a12s, a22s, ell),
            )
        if raise_on_failure:
            report.raise_if_failed()
        return report
