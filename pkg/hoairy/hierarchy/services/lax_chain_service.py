import functools
import logging
from typing import List, Tuple

from hoairy.diffring.coefficients import I, rational
from hoairy.diffring.ring import DiffPoly, MatDiffPoly, VecDiffPoly, dot
from hoairy.diffring.services.calculus_service import CalculusService
from hoairy.hierarchy.datatypes import BMatrix, ChainBlock, HierarchyMember, LenardChain
from hoairy.hierarchy.services.lenard_service import LenardService

log = logging.getLogger(__name__)


def _parity(j: int) -> int:
    return 1 if j % 2 == 0 else -1


class LaxChainService:
    """
    Coefficients of A(lambda) = sum_j A_j lambda^(2n-j) + hat(A)_2n and of
    B(lambda) = B_1 lambda + B_0, built from the a^21 / a^22 recursion.
    """

    @staticmethod
    def leading_block(k: int) -> ChainBlock:
        return ChainBlock(
            a11=DiffPoly.constant(I * rational(-k, k + 1)),
            a12=VecDiffPoly.zeros(k),
            a21=VecDiffPoly.zeros(k),
            a22=MatDiffPoly.identity(k, I * rational(1, k + 1)),
        )

    @staticmethod
    def next_a21(block: ChainBlock, u: VecDiffPoly) -> VecDiffPoly:
        """a_(j+1)^21 = -i D a_j^21 - a_j^11 u + a_j^22 u."""
        return (
            block.a21.map(CalculusService.total_derivative).scale(-I)
            - u.scale(block.a11)
            + block.a22.apply(u)
        )

    @staticmethod
    def convolution_a22(a21s, a12s, a22s, index: int) -> MatDiffPoly:
        """i * sum over l = 1..index-1 of a_l^22 a_(index-l)^22 + a_l^21 a_(index-l)^12."""
        k = len(a21s[1])
        total = MatDiffPoly.zeros(k)
        for ell in range(1, index):
            total = total + a22s[ell].matmul(a22s[index - ell])
            total = total + MatDiffPoly.outer(a21s[ell], a12s[index - ell])
        return total.scale(I)

    @staticmethod
    def convolution_a11(a11s, a12s, a21s, index: int) -> DiffPoly:
        """-i * sum over l = 1..index-1 of a_l^11 a_(index-l)^11 + a_l^12 a_(index-l)^21."""
        total = DiffPoly.zero()
        for ell in range(1, index):
            total = total + a11s[ell] * a11s[index - ell]
            total = total + dot(a12s[ell], a21s[index - ell])
        return total * (-I)

    @staticmethod
    def hat_diagonal(k: int) -> Tuple[DiffPoly, ...]:
        scale = I * rational(1, k + 1)
        xs = [DiffPoly.x(j) for j in range(1, k + 1)]
        t = DiffPoly.t()
        x_sum = DiffPoly.zero()
        for x in xs:
            x_sum = x_sum + x
        corner = (t * (-k) - x_sum) * scale
        lower = [(t + x * (k + 1) - x_sum) * scale for x in xs]
        return (corner, *lower)

    @classmethod
    @functools.lru_cache(maxsize=None)
    def lax_chain(cls, n: int, k: int) -> LenardChain:
        if n < 1 or k < 1:
            raise ValueError(f"Lax chains need n >= 1 and k >= 1, got {n}, {k}")
        u = VecDiffPoly.u_vector(k)
        top = 2 * n
        a21s: List[VecDiffPoly] = [VecDiffPoly.zeros(k)] * (top + 1)
        a12s: List[VecDiffPoly] = [VecDiffPoly.zeros(k)] * (top + 1)
        a22s: List[MatDiffPoly] = [MatDiffPoly.zeros(k)] * (top + 1)
        a11s: List[DiffPoly] = [DiffPoly.zero()] * (top + 1)
        blocks = [cls.leading_block(k)]

        a21s[1] = u.scale(I)
        for j in range(1, top + 1):
            if j > 1:
                a21s[j] = cls.next_a21(blocks[j - 1], u)
                a22s[j] = cls.convolution_a22(a21s, a12s, a22s, j)
            a11s[j] = -a22s[j].trace()
            a12s[j] = a21s[j].scale(_parity(j))
            blocks.append(
                ChainBlock(a11=a11s[j], a12=a12s[j], a21=a21s[j], a22=a22s[j])
            )
            log.debug("lax chain n=%d k=%d: block %d built", n, k, j)
        return LenardChain(n=n, k=k, blocks=tuple(blocks), hat=cls.hat_diagonal(k))

    @classmethod
    def formal_next_a21(cls, chain: LenardChain) -> VecDiffPoly:
        """The a^21 recursion applied once more past the last block."""
        u = VecDiffPoly.u_vector(chain.k)
        return cls.next_a21(chain.block(2 * chain.n), u)

    @classmethod
    def chain_member(cls, chain: LenardChain) -> HierarchyMember:
        """The hierarchy member read off the chain: lhs = -i times the next a^21."""
        return HierarchyMember(
            n=chain.n,
            k=chain.k,
            lhs=cls.formal_next_a21(chain).scale(-I),
            rhs=LenardService.hierarchy_rhs(chain.k),
        )

    @classmethod
    def lax_matrices(cls, chain: LenardChain) -> List[MatDiffPoly]:
        """A_0..A_2n as (k+1)×(k+1) matrices; the hat correction is folded into A_2n."""
        matrices = [block.as_matrix() for block in chain.blocks]
        matrices[-1] = matrices[-1] + MatDiffPoly.diagonal(chain.hat)
        return matrices

    @staticmethod
    def b_matrix(k: int) -> BMatrix:
        corner = I * rational(-k, k + 1)
        lower = I * rational(1, k + 1)
        linear = MatDiffPoly.diagonal([corner] + [lower] * k)
        u = VecDiffPoly.u_vector(k)
        rows = [[DiffPoly.zero()] + list(u.scale(-I))]
        for i in range(k):
            rows.append([u[i] * I] + [DiffPoly.zero()] * k)
        return BMatrix(k=k, linear=linear, constant=MatDiffPoly(rows))
