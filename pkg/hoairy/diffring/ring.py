"""
Differential polynomials in u_j and their derivatives, extended by the
scalar generators t and x_1..x_k.

A DiffPoly is an immutable map from monomials to exact Gaussian-rational
coefficients. Monomials are sorted tuples of (Generator, power) pairs, so
two polynomials are equal exactly when their term maps are equal.
"""
import re
from enum import IntEnum
from types import MappingProxyType
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from hoairy.diffring.coefficients import (
    ONE,
    ZERO,
    Coefficient,
    Scalar,
    coerce,
    is_zero,
    to_complex,
)


class GeneratorKind(IntEnum):
    U = 0
    T = 1
    X = 2


_U_NAME = re.compile(r"^(?:D(\d*))?u(\d+)$")
_X_NAME = re.compile(r"^x(\d+)$")


class Generator(NamedTuple):
    kind: GeneratorKind
    index: int = 0
    order: int = 0

    @classmethod
    def u(cls, component: int, order: int = 0) -> "Generator":
        if component < 1 or order < 0:
            raise ValueError(f"Invalid u generator: component {component}, order {order}")
        return cls(GeneratorKind.U, component, order)

    @classmethod
    def t(cls) -> "Generator":
        return cls(GeneratorKind.T, 0, 0)

    @classmethod
    def x(cls, component: int) -> "Generator":
        if component < 1:
            raise ValueError(f"Invalid x generator: component {component}")
        return cls(GeneratorKind.X, component, 0)

    @property
    def is_u(self) -> bool:
        return self.kind == GeneratorKind.U

    @property
    def name(self) -> str:
        if self.kind == GeneratorKind.T:
            return "t"
        if self.kind == GeneratorKind.X:
            return f"x{self.index}"
        if self.order == 0:
            return f"u{self.index}"
        if self.order == 1:
            return f"Du{self.index}"
        return f"D{self.order}u{self.index}"

    @classmethod
    def from_name(cls, name: str) -> "Generator":
        if name == "t":
            return cls.t()
        match = _X_NAME.match(name)
        if match:
            return cls.x(int(match.group(1)))
        match = _U_NAME.match(name)
        if match:
            order_text = match.group(1)
            if order_text is None:
                order = 0
            elif order_text == "":
                order = 1
            else:
                order = int(order_text)
            return cls.u(int(match.group(2)), order)
        raise ValueError(f"Unknown generator name: {name}")


Monomial = Tuple[Tuple[Generator, int], ...]
ONE_MONOMIAL: Monomial = ()


def monomial_mul(left: Monomial, right: Monomial) -> Monomial:
    if not left:
        return right
    if not right:
        return left
    powers = dict(left)
    for generator, power in right:
        powers[generator] = powers.get(generator, 0) + power
    return tuple(sorted(powers.items()))


def monomial_degree(monomial: Monomial) -> int:
    return sum(power for _, power in monomial)


def monomial_sort_key(monomial: Monomial):
    # Graded: higher total degree first, ties broken lexicographically.
    return -monomial_degree(monomial), monomial


class DiffPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        cleaned: Dict[Monomial, Coefficient] = {}
        for monomial, value in (terms or {}).items():
            coefficient = coerce(value)
            if is_zero(coefficient):
                continue
            powers: Dict[Generator, int] = {}
            for generator, power in monomial:
                powers[generator] = powers.get(generator, 0) + power
            key = tuple(sorted((g, p) for g, p in powers.items() if p != 0))
            cleaned[key] = cleaned.get(key, ZERO) + coefficient
            if is_zero(cleaned[key]):
                del cleaned[key]
        self._terms = cleaned

    @classmethod
    def _from_clean(cls, terms: Dict[Monomial, Coefficient]) -> "DiffPoly":
        result = cls.__new__(cls)
        result._terms = terms
        return result

    @classmethod
    def zero(cls) -> "DiffPoly":
        return cls._from_clean({})

    @classmethod
    def constant(cls, value: Scalar) -> "DiffPoly":
        return cls({ONE_MONOMIAL: value})

    @classmethod
    def generator(cls, generator: Generator, power: int = 1) -> "DiffPoly":
        return cls._from_clean({((generator, power),): ONE})

    @classmethod
    def u(cls, component: int, order: int = 0) -> "DiffPoly":
        return cls.generator(Generator.u(component, order))

    @classmethod
    def t(cls) -> "DiffPoly":
        return cls.generator(Generator.t())

    @classmethod
    def x(cls, component: int) -> "DiffPoly":
        return cls.generator(Generator.x(component))

    @property
    def terms(self) -> Mapping[Monomial, Coefficient]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterable[Tuple[Monomial, Coefficient]]:
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, monomial: Monomial) -> Coefficient:
        return self._terms.get(monomial, ZERO)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda item: monomial_sort_key(item[0]))

    def generators(self) -> set:
        return {g for monomial in self._terms for g, _ in monomial}

    def u_generators(self) -> set:
        return {g for g in self.generators() if g.is_u}

    def max_order(self) -> int:
        return max((g.order for g in self.u_generators()), default=-1)

    def degree_in(self, generator: Generator) -> int:
        return max(
            (p for monomial in self._terms for g, p in monomial if g == generator),
            default=0,
        )

    # Ring arithmetic

    @staticmethod
    def lift(other: Union["DiffPoly", Scalar]) -> "DiffPoly":
        if isinstance(other, DiffPoly):
            return other
        return DiffPoly.constant(other)

    def __add__(self, other) -> "DiffPoly":
        other = self.lift(other)
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            total = terms.get(monomial, ZERO) + coefficient
            if is_zero(total):
                terms.pop(monomial, None)
            else:
                terms[monomial] = total
        return DiffPoly._from_clean(terms)

    __radd__ = __add__

    def __neg__(self) -> "DiffPoly":
        return DiffPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "DiffPoly":
        return self + (-self.lift(other))

    def __rsub__(self, other) -> "DiffPoly":
        return self.lift(other) - self

    def scale(self, value: Scalar) -> "DiffPoly":
        factor = coerce(value)
        if is_zero(factor):
            return DiffPoly.zero()
        return DiffPoly._from_clean({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other) -> "DiffPoly":
        if not isinstance(other, DiffPoly):
            return self.scale(other)
        terms: Dict[Monomial, Coefficient] = {}
        for left_monomial, left_coefficient in self._terms.items():
            for right_monomial, right_coefficient in other._terms.items():
                monomial = monomial_mul(left_monomial, right_monomial)
                total = terms.get(monomial, ZERO) + left_coefficient * right_coefficient
                if is_zero(total):
                    terms.pop(monomial, None)
                else:
                    terms[monomial] = total
        return DiffPoly._from_clean(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "DiffPoly":
        if exponent < 0:
            raise ValueError("Negative powers are not ring elements")
        result = DiffPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Coefficient)):
            other = DiffPoly.constant(other)
        if not isinstance(other, DiffPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        from hoairy.diffring.serializers import DiffPolyTextSerializer

        return f"DiffPoly({DiffPolyTextSerializer.dumps(self)!r})"

    # Calculus with respect to a single generator, treating it as a plain
    # polynomial variable.

    def partial(self, generator: Generator) -> "DiffPoly":
        terms: Dict[Monomial, Coefficient] = {}
        for monomial, coefficient in self._terms.items():
            powers = dict(monomial)
            power = powers.get(generator, 0)
            if power == 0:
                continue
            if power == 1:
                del powers[generator]
            else:
                powers[generator] = power - 1
            key = tuple(sorted(powers.items()))
            total = terms.get(key, ZERO) + coefficient * power
            if is_zero(total):
                terms.pop(key, None)
            else:
                terms[key] = total
        return DiffPoly._from_clean(terms)

    def integrate_wrt(self, generator: Generator) -> "DiffPoly":
        terms: Dict[Monomial, Coefficient] = {}
        for monomial, coefficient in self._terms.items():
            powers = dict(monomial)
            power = powers.get(generator, 0) + 1
            powers[generator] = power
            key = tuple(sorted(powers.items()))
            terms[key] = coefficient / power
        return DiffPoly._from_clean(terms)

    def split_by(self, predicate: Callable[[Monomial], bool]):
        selected: Dict[Monomial, Coefficient] = {}
        rest: Dict[Monomial, Coefficient] = {}
        for monomial, coefficient in self._terms.items():
            (selected if predicate(monomial) else rest)[monomial] = coefficient
        return DiffPoly._from_clean(selected), DiffPoly._from_clean(rest)

    def constant_part(self) -> "DiffPoly":
        """Terms annihilated by D: plain numbers and monomials in x_j only."""
        selected, _ = self.split_by(
            lambda monomial: all(g.kind == GeneratorKind.X for g, _ in monomial)
        )
        return selected

    # Substitution

    def map_generators(
        self, mapping: Callable[[Generator], Optional[Generator]]
    ) -> "DiffPoly":
        """Rename generators; a generator mapped to None is set to zero."""
        result: Dict[Monomial, Scalar] = {}
        for monomial, coefficient in self._terms.items():
            renamed = []
            for generator, power in monomial:
                target = mapping(generator)
                if target is None:
                    break
                renamed.append((target, power))
            else:
                key = tuple(sorted(renamed))
                result[key] = result.get(key, ZERO) + coefficient
        return DiffPoly(result)

    def restrict(self, components: Iterable[int]) -> "DiffPoly":
        kept = set(components)
        return self.map_generators(
            lambda g: g if g.kind == GeneratorKind.T or g.index in kept else None
        )

    def permute(self, permutation: Mapping[int, int]) -> "DiffPoly":
        return self.map_generators(
            lambda g: g
            if g.kind == GeneratorKind.T
            else Generator(g.kind, permutation.get(g.index, g.index), g.order)
        )

    def evaluate(self, values: Mapping[Generator, complex]) -> complex:
        total = 0j
        for monomial, coefficient in self._terms.items():
            term = to_complex(coefficient)
            for generator, power in monomial:
                term *= values[generator] ** power
            total += term
        return total


class VecDiffPoly(Sequence):
    """A length-k vector of DiffPoly; used for both rows and columns."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[Union[DiffPoly, Scalar]]):
        self._entries = tuple(DiffPoly.lift(entry) for entry in entries)

    @classmethod
    def zeros(cls, k: int) -> "VecDiffPoly":
        return cls(DiffPoly.zero() for _ in range(k))

    @classmethod
    def u_vector(cls, k: int, order: int = 0) -> "VecDiffPoly":
        return cls(DiffPoly.u(j, order) for j in range(1, k + 1))

    @classmethod
    def unit(cls, k: int, component: int) -> "VecDiffPoly":
        return cls(DiffPoly.constant(1 if j == component else 0) for j in range(1, k + 1))

    def __getitem__(self, index):
        return self._entries[index]

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[DiffPoly]:
        return iter(self._entries)

    def check_same_length(self, other: "VecDiffPoly"):
        if len(self) != len(other):
            raise ValueError(f"Dimension mismatch: {len(self)} and {len(other)}")

    def __add__(self, other: "VecDiffPoly") -> "VecDiffPoly":
        self.check_same_length(other)
        return VecDiffPoly(a + b for a, b in zip(self, other))

    def __sub__(self, other: "VecDiffPoly") -> "VecDiffPoly":
        self.check_same_length(other)
        return VecDiffPoly(a - b for a, b in zip(self, other))

    def __neg__(self) -> "VecDiffPoly":
        return VecDiffPoly(-a for a in self)

    def scale(self, factor: Union[DiffPoly, Scalar]) -> "VecDiffPoly":
        return VecDiffPoly(a * factor for a in self)

    def map(self, function: Callable[[DiffPoly], DiffPoly]) -> "VecDiffPoly":
        return VecDiffPoly(function(a) for a in self)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VecDiffPoly):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"VecDiffPoly({list(self._entries)!r})"


class MatDiffPoly:
    """A square k×k grid of DiffPoly."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Union[DiffPoly, Scalar]]]):
        self._rows = tuple(tuple(DiffPoly.lift(entry) for entry in row) for row in rows)
        size = len(self._rows)
        if any(len(row) != size for row in self._rows):
            raise ValueError("MatDiffPoly must be square")

    @classmethod
    def zeros(cls, k: int) -> "MatDiffPoly":
        return cls([[DiffPoly.zero()] * k for _ in range(k)])

    @classmethod
    def identity(cls, k: int, value: Scalar = 1) -> "MatDiffPoly":
        return cls([[value if i == j else 0 for j in range(k)] for i in range(k)])

    @classmethod
    def diagonal(cls, entries: Sequence[Union[DiffPoly, Scalar]]) -> "MatDiffPoly":
        k = len(entries)
        return cls(
            [[entries[i] if i == j else 0 for j in range(k)] for i in range(k)]
        )

    @classmethod
    def outer(cls, column: VecDiffPoly, row: VecDiffPoly) -> "MatDiffPoly":
        column.check_same_length(row)
        return cls([[a * b for b in row] for a in column])

    @property
    def size(self) -> int:
        return len(self._rows)

    def __getitem__(self, index: Tuple[int, int]) -> DiffPoly:
        i, j = index
        return self._rows[i][j]

    def rows(self) -> Tuple[Tuple[DiffPoly, ...], ...]:
        return self._rows

    def transpose(self) -> "MatDiffPoly":
        return MatDiffPoly(zip(*self._rows))

    def trace(self) -> DiffPoly:
        total = DiffPoly.zero()
        for i in range(self.size):
            total = total + self._rows[i][i]
        return total

    def __add__(self, other: "MatDiffPoly") -> "MatDiffPoly":
        return MatDiffPoly(
            [a + b for a, b in zip(row, other_row)]
            for row, other_row in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "MatDiffPoly") -> "MatDiffPoly":
        return MatDiffPoly(
            [a - b for a, b in zip(row, other_row)]
            for row, other_row in zip(self._rows, other._rows)
        )

    def __neg__(self) -> "MatDiffPoly":
        return MatDiffPoly([-a for a in row] for row in self._rows)

    def scale(self, factor: Union[DiffPoly, Scalar]) -> "MatDiffPoly":
        return MatDiffPoly([a * factor for a in row] for row in self._rows)

    def map(self, function: Callable[[DiffPoly], DiffPoly]) -> "MatDiffPoly":
        return MatDiffPoly([function(a) for a in row] for row in self._rows)

    def matmul(self, other: "MatDiffPoly") -> "MatDiffPoly":
        k = self.size
        return MatDiffPoly(
            [
                dot(self._rows[i], [other._rows[l][j] for l in range(k)])
                for j in range(k)
            ]
            for i in range(k)
        )

    def apply(self, vector: VecDiffPoly) -> VecDiffPoly:
        return VecDiffPoly(dot(row, vector) for row in self._rows)

    def left_apply(self, row_vector: VecDiffPoly) -> VecDiffPoly:
        """Row vector times matrix."""
        return self.transpose().apply(row_vector)

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self._rows for a in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatDiffPoly):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"MatDiffPoly({[list(row) for row in self._rows]!r})"


def dot(left: Iterable[DiffPoly], right: Iterable[DiffPoly]) -> DiffPoly:
    total = DiffPoly.zero()
    for a, b in zip(left, right):
        if a and b:
            total = total + a * b
    return total
