from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from hoairy.diffring.coefficients import i_power
from hoairy.diffring.ring import DiffPoly, Generator, MatDiffPoly, VecDiffPoly
from hoairy.diffring.serializers import DiffPolyTextSerializer
from hoairy.utils.exception_utils import IdentityViolation, NotMonic


@dataclass(frozen=True)
class HierarchyMember:
    """The equation lhs = rhs with lhs = (L+ L-)^n u and rhs_j = -(x_j + t) u_j."""

    n: int
    k: int
    lhs: VecDiffPoly
    rhs: VecDiffPoly

    @property
    def order(self) -> int:
        return 2 * self.n

    def residual(self) -> VecDiffPoly:
        return self.lhs - self.rhs

    def leading_generator(self, component: int) -> Generator:
        return Generator.u(component, self.order)

    def check_leading_terms(self):
        """Each component must be i^(2n) D^(2n) u_j plus terms of lower order."""
        leading = i_power(self.order)
        for component, equation in enumerate(self.residual(), start=1):
            top = self.leading_generator(component)
            monomial = ((top, 1),)
            if equation.coefficient(monomial) != leading:
                raise NotMonic(
                    f"Component {component} does not start with i^{self.order} "
                    f"times {top.name}",
                    {"component": component},
                )
            rest = equation - DiffPoly.generator(top).scale(leading)
            if rest.max_order() >= self.order:
                raise NotMonic(
                    f"Component {component} has other terms of order {self.order}",
                    {"component": component},
                )


@dataclass(frozen=True)
class ChainBlock:
    """Blocks of one Lax coefficient: a11 scalar, a12 row, a21 column, a22 k×k."""

    a11: DiffPoly
    a12: VecDiffPoly
    a21: VecDiffPoly
    a22: MatDiffPoly

    def as_matrix(self) -> MatDiffPoly:
        k = len(self.a21)
        rows = [[self.a11] + list(self.a12)]
        for i in range(k):
            rows.append([self.a21[i]] + [self.a22[i, j] for j in range(k)])
        return MatDiffPoly(rows)


@dataclass(frozen=True)
class LenardChain:
    n: int
    k: int
    blocks: Tuple[ChainBlock, ...]
    # Diagonal of the t- and x-dependent correction added at lambda^0:
    # the corner entry first, then the k entries of the lower block.
    hat: Tuple[DiffPoly, ...]

    def block(self, j: int) -> ChainBlock:
        return self.blocks[j]


@dataclass(frozen=True)
class BMatrix:
    """B(lambda) = linear * lambda + constant, both (k+1)×(k+1)."""

    k: int
    linear: MatDiffPoly
    constant: MatDiffPoly


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    residual: str = "0"


@dataclass
class IdentityReport:
    n: int
    k: int
    checks: List[IdentityCheck] = field(default_factory=list)

    def record(self, name: str, residual) -> IdentityCheck:
        if isinstance(residual, DiffPoly):
            entries = [residual]
        elif isinstance(residual, MatDiffPoly):
            entries = [entry for row in residual.rows() for entry in row]
        else:
            entries = list(residual)
        nonzero = [entry for entry in entries if not entry.is_zero()]
        check = IdentityCheck(
            name=name,
            passed=not nonzero,
            residual="0"
            if not nonzero
            else "; ".join(DiffPolyTextSerializer.dumps(entry) for entry in nonzero),
        )
        self.checks.append(check)
        return check

    def extend(self, other: "IdentityReport"):
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.passed]

    def first_failure(self) -> Optional[IdentityCheck]:
        failures = self.failures
        return failures[0] if failures else None

    def raise_if_failed(self):
        failure = self.first_failure()
        if failure is not None:
            raise IdentityViolation(
                f"Identity {failure.name} does not hold",
                {"identity": failure.name, "residual": failure.residual},
            )

    def as_dict(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "passed": self.passed,
            "checked": len(self.checks),
            "failures": [
                {"identity": check.name, "residual": check.residual}
                for check in self.failures
            ],
        }
