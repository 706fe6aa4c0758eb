"""
Multiplicative and additive characters of a finite field, and multisets of
multiplicative characters (parameter sets of hypergeometric functions).

The character group of k* is cyclic of order n = q - 1 and generated by
χ_1: g ↦ ζ_n, where g is the field's fixed generator. χ_j is stored by its
index j mod n; the trivial character ε is χ_0 and extends by ε(0) = 0.
"""
import logging
import re
from collections import Counter
from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Iterable, Iterator, List, Tuple, Union

from src.constant import DEFAULT_PSI_SHIFT
from src.cyclo import CycloNum, root_of_unity
from src.errors import FieldMismatchError, NoSuchCharacterError, ParseError
from src.gf import ElemLike, FiniteField

logger = logging.getLogger(__name__)

_INDEX_SYNTAX = re.compile(r"^(?:chi:)?(-?\d+)$")


@dataclass(frozen=True)
class MultChar:
    """The character χ_index of k*, extended by zero."""
    field: FiniteField
    index: int

    def __post_init__(self):
        object.__setattr__(self, "index", self.index % self.field.unit_order)

    def __call__(self, x: ElemLike) -> CycloNum:
        return eval_mult(self, x)

    def is_trivial(self) -> bool:
        return self.index == 0

    def order(self) -> int:
        n = self.field.unit_order
        return n // gcd(n, self.index)

    def sign(self) -> int:
        """χ(-1), which is ±1."""
        if self.field.p == 2:
            return 1
        return -1 if self.index % 2 else 1

    def _check(self, other: "MultChar") -> None:
        if other.field != self.field:
            raise FieldMismatchError(
                f"Characters of {self.field} and {other.field} do not combine.")

    def __mul__(self, other: "MultChar") -> "MultChar":
        self._check(other)
        return MultChar(self.field, self.index + other.index)

    def __truediv__(self, other: "MultChar") -> "MultChar":
        self._check(other)
        return MultChar(self.field, self.index - other.index)

    def __pow__(self, k: int) -> "MultChar":
        return MultChar(self.field, self.index * k)

    def conj(self) -> "MultChar":
        return MultChar(self.field, -self.index)

    def __str__(self) -> str:
        return "eps" if self.index == 0 else f"chi:{self.index}"


@dataclass(frozen=True)
class AddChar:
    """ψ_a(x) = ζ_p^{Tr(a·x)} for a fixed nonzero shift a."""
    field: FiniteField
    shift: int = DEFAULT_PSI_SHIFT

    def __post_init__(self):
        value = self.field.value_of(self.shift)
        if value == 0:
            raise NoSuchCharacterError("The additive character needs a nonzero shift.")
        object.__setattr__(self, "shift", value)

    def __call__(self, x: ElemLike) -> CycloNum:
        return eval_add(self, x)


def eval_mult(chi: MultChar, x: ElemLike) -> CycloNum:
    field = chi.field
    v = field.value_of(x)
    n = field.unit_order
    if v == 0:
        return CycloNum.zero(n)
    return root_of_unity(n, chi.index * field.discrete_log(v))


def eval_add(psi: AddChar, x: ElemLike) -> CycloNum:
    field = psi.field
    v = field.value_of(x)
    return root_of_unity(field.p, field.trace(field.mul(psi.shift, v)))


def trivial_char(field: FiniteField) -> MultChar:
    return MultChar(field, 0)


def default_psi(field: FiniteField) -> AddChar:
    return AddChar(field, DEFAULT_PSI_SHIFT)


def delta_char(chi: MultChar) -> int:
    """δ(χ): 1 for the trivial character, else 0."""
    return 1 if chi.is_trivial() else 0


def quadratic_char(field: FiniteField) -> MultChar:
    """φ, the unique character of order 2; undefined in characteristic 2."""
    if field.p == 2:
        raise NoSuchCharacterError(f"{field} has no quadratic character.")
    return MultChar(field, field.unit_order // 2)


def cubic_chars(field: FiniteField) -> Tuple[MultChar, MultChar]:
    """(ρ, ρ̄) with ρ = χ_{n/3}; needs 3 | q - 1."""
    n = field.unit_order
    if n % 3:
        raise NoSuchCharacterError(f"{field} has no cubic character.")
    return MultChar(field, n // 3), MultChar(field, 2 * n // 3)


def nth_root_chars(field: FiniteField, n: int) -> List[MultChar]:
    """All characters φ with φ^n = ε."""
    if n < 1:
        raise ValueError(f"Exponent must be positive, got {n}.")
    step = field.unit_order // gcd(field.unit_order, n)
    return [MultChar(field, k) for k in range(0, field.unit_order, step)]


CharLike = Union[MultChar, int]


def _index(field: FiniteField, chi: CharLike) -> int:
    if isinstance(chi, MultChar):
        if chi.field != field:
            raise FieldMismatchError(f"{chi} is not a character of {field}.")
        return chi.index
    return int(chi) % field.unit_order


@dataclass(frozen=True)
class ParamSet:
    """
    A finite multiset of multiplicative characters.

    `items` holds sorted (index, multiplicity) pairs with positive
    multiplicities, so equal multisets compare and hash equal.
    """
    field: FiniteField
    items: Tuple[Tuple[int, int], ...] = dc_field(default=())

    def __post_init__(self):
        counts: Counter = Counter()
        for index, mult in self.items:
            counts[index % self.field.unit_order] += mult
        normalized = tuple(sorted((i, c) for i, c in counts.items() if c > 0))
        object.__setattr__(self, "items", normalized)

    @classmethod
    def of(cls, field: FiniteField, members: Iterable[CharLike] = ()) -> "ParamSet":
        return cls(field, tuple((_index(field, chi), 1) for chi in members))

    @property
    def indices(self) -> Tuple[int, ...]:
        """Member indices with repetition, ascending."""
        return tuple(i for i, c in self.items for _ in range(c))

    @property
    def members(self) -> Tuple[MultChar, ...]:
        return tuple(MultChar(self.field, i) for i in self.indices)

    def __iter__(self) -> Iterator[MultChar]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.degree

    @property
    def degree(self) -> int:
        return sum(c for _, c in self.items)

    def multiplicity(self, chi: CharLike) -> int:
        index = _index(self.field, chi)
        return dict(self.items).get(index, 0)

    def _check(self, other: "ParamSet") -> None:
        if other.field != self.field:
            raise FieldMismatchError(
                f"Parameter sets over {self.field} and {other.field} do not combine.")

    def pairing(self, other: "ParamSet") -> int:
        """(A, B) = Σ_{a∈A, b∈B} δ(a·b̄): matching pairs counted with multiplicity."""
        self._check(other)
        theirs = dict(other.items)
        return sum(c * theirs.get(i, 0) for i, c in self.items)

    def shift(self, chi: CharLike) -> "ParamSet":
        """A·χ = {a·χ : a ∈ A}."""
        j = _index(self.field, chi)
        return ParamSet(self.field, tuple((i + j, c) for i, c in self.items))

    def conj(self) -> "ParamSet":
        return ParamSet(self.field, tuple((-i, c) for i, c in self.items))

    def union(self, other: "ParamSet") -> "ParamSet":
        self._check(other)
        return ParamSet(self.field, self.items + other.items)

    def __add__(self, other: "ParamSet") -> "ParamSet":
        return self.union(other)

    def __str__(self) -> str:
        return ",".join(str(chi) for chi in self.members)


def degree(a: ParamSet) -> int:
    return a.degree


def pairing(a: ParamSet, b: ParamSet) -> int:
    return a.pairing(b)


def shift(a: ParamSet, chi: CharLike) -> ParamSet:
    return a.shift(chi)


def conj(a: ParamSet) -> ParamSet:
    return a.conj()


def union(a: ParamSet, b: ParamSet) -> ParamSet:
    return a.union(b)


def parse_char(field: FiniteField, token: str, offset: int = 0) -> MultChar:
    """
    Parses one character token: `eps`, `phi`, `rho`, `chi:j` or a bare index `j`.

    Raises:
        ParseError: For malformed tokens; `position` points into the full text.
        NoSuchCharacterError: For `phi`/`rho` when the field lacks them.
    """
    text = token.strip()
    lead = offset + (len(token) - len(token.lstrip()))
    if text == "eps":
        return trivial_char(field)
    if text == "phi":
        return quadratic_char(field)
    if text == "rho":
        return cubic_chars(field)[0]
    match = _INDEX_SYNTAX.match(text)
    if match:
        return MultChar(field, int(match.group(1)))
    if not text:
        raise ParseError(token, lead, "empty character token")
    raise ParseError(token, lead, f"unknown character '{text}'")


def parse_paramset(field: FiniteField, text: str) -> ParamSet:
    """Parses a comma-separated character list; the empty string is ∅."""
    if not text.strip():
        return ParamSet(field)
    members = []
    offset = 0
    for token in text.split(","):
        try:
            members.append(parse_char(field, token, offset))
        except ParseError as e:
            raise ParseError(text, e.position, e.reason) from e
        offset += len(token) + 1
    return ParamSet.of(field, members)
