"""
Finite fields GF(q), q = p^f, with table-driven multiplication.

Elements are encoded as integers v = c_0 + c_1 p + ... + c_{f-1} p^{f-1},
where (c_0, ..., c_{f-1}) are the coefficients of the residue polynomial,
lowest degree first. Multiplication, inversion and powers go through the
exponent/logarithm tables of a fixed generator; addition is digitwise mod p.
"""
import itertools
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Poly, factorint, isprime, primefactors
from sympy.abc import x as _X

from src.constant import MAX_FIELD_ORDER
from src.errors import (FieldMismatchError, FieldTooLargeError,
                        InvalidFieldError, LogOfZeroError, NoGeneratorError,
                        NotPrimeError, ParseError, ReducibleModulusError)

logger = logging.getLogger(__name__)

_POWER_SYNTAX = re.compile(r"^g\^(-?\d+)$")


def _read_only(values: Sequence[int]) -> np.ndarray:
    arr = np.array(values, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class FiniteField:
    """
    The field GF(p^f) together with its generator and lookup tables.

    Instances are cheap to share but expensive to build; obtain them through
    `construct_field` or `field_from_q`, which cache by (p, f, modulus).
    """

    def __init__(self, p: int, f: int = 1,
                 modulus: Optional[Sequence[int]] = None):
        if p < 2 or not isprime(p):
            raise NotPrimeError(f"Characteristic {p} is not a prime.")
        if f < 1:
            raise InvalidFieldError(f"Extension degree must be >= 1, got {f}.")
        if p ** f > MAX_FIELD_ORDER:
            raise FieldTooLargeError(
                f"GF({p}^{f}) exceeds the supported order {MAX_FIELD_ORDER}.")

        self.p = p
        self.f = f
        self.q = p ** f
        self.unit_order = self.q - 1
        if modulus is None:
            self.modulus = self._smallest_irreducible(p, f)
        else:
            self.modulus = self._checked_modulus(p, f, modulus)
        self._places = tuple(p ** i for i in range(f))

        self.generator = self._find_generator()
        self._build_tables()
        logger.debug("Built GF(%d) with modulus %s and generator %d",
                     self.q, list(self.modulus), self.generator)

    # ------------------------------------------------------------------
    # construction helpers
    # ------------------------------------------------------------------

    @staticmethod
    def _is_irreducible(p: int, coeffs: Sequence[int]) -> bool:
        return Poly(list(reversed(coeffs)), _X, modulus=p).is_irreducible

    @classmethod
    def _smallest_irreducible(cls, p: int, f: int) -> Tuple[int, ...]:
        """First monic irreducible in lexicographic order of (c_0, ..., c_{f-1})."""
        for tail in itertools.product(range(p), repeat=f):
            coeffs = tail + (1,)
            if cls._is_irreducible(p, coeffs):
                return coeffs
        raise ReducibleModulusError(
            f"No irreducible polynomial of degree {f} over GF({p}).")

    @classmethod
    def _checked_modulus(cls, p: int, f: int,
                         modulus: Sequence[int]) -> Tuple[int, ...]:
        raw = [int(c) for c in modulus]
        if len(raw) != f + 1 or raw[-1] != 1:
            raise ReducibleModulusError(
                f"Modulus {list(modulus)} is not monic of degree {f}.")
        coeffs = tuple(c % p for c in raw)
        if not cls._is_irreducible(p, coeffs):
            raise ReducibleModulusError(
                f"Modulus {list(modulus)} is reducible over GF({p}).")
        return coeffs

    def _digits(self, v: int) -> List[int]:
        out = []
        for _ in range(self.f):
            v, d = divmod(v, self.p)
            out.append(d)
        return out

    def _from_digits(self, digits: Sequence[int]) -> int:
        return sum(d * place for d, place in zip(digits, self._places))

    def _poly_mul(self, a: int, b: int) -> int:
        """Schoolbook product modulo the defining polynomial, used before tables exist."""
        p, f = self.p, self.f
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * f - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        for k in range(2 * f - 2, f - 1, -1):
            c = prod[k]
            if c:
                for i in range(f + 1):
                    prod[k - f + i] = (prod[k - f + i] - c * self.modulus[i]) % p
        return self._from_digits(prod[:f])

    def _poly_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._poly_mul(result, a)
            a = self._poly_mul(a, a)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        n = self.unit_order
        cofactors = [n // r for r in primefactors(n)]
        for v in range(1, self.q):
            if all(self._poly_pow(v, c) != 1 for c in cofactors):
                return v
        raise NoGeneratorError(f"No element of order {n} in GF({self.q}).")

    def _build_tables(self) -> None:
        n = self.unit_order
        exp = [0] * n
        log = [-1] * self.q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, self.generator)
        if x != 1 or sum(1 for v in log if v >= 0) != n:
            raise NoGeneratorError(
                f"Generator {self.generator} does not span GF({self.q})*.")
        self.exp_table = _read_only(exp)
        self.log_table = _read_only(log)

        trace = [0] * self.q
        frobenius = [self.p ** i for i in range(self.f)]
        for v in range(1, self.q):
            t = log[v]
            acc = 0
            for e in frobenius:
                acc = self.add(acc, exp[(t * e) % n])
            if acc >= self.p:
                raise NoGeneratorError(
                    f"Trace of {v} left the prime field in GF({self.q}).")
            trace[v] = acc
        self.trace_table = _read_only(trace)

    # ------------------------------------------------------------------
    # identity
    # ------------------------------------------------------------------

    @property
    def key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return (self.p, self.f, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __reduce__(self):
        return (construct_field, (self.p, self.f, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    @property
    def conductor(self) -> int:
        """Order of the roots of unity needed for Gauss sums over this field."""
        return self.p * self.unit_order

    def descriptor(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "q": self.q,
            "modulus": list(self.modulus),
            "generator": self.generator,
        }

    # ------------------------------------------------------------------
    # element arithmetic on integer encodings
    # ------------------------------------------------------------------

    def value_of(self, x: "ElemLike") -> int:
        """Integer encoding of `x`, checking that it belongs to this field."""
        if isinstance(x, FieldElem):
            if x.field != self:
                raise FieldMismatchError(f"{x} is not an element of {self}.")
            return x.value
        v = int(x)
        if not 0 <= v < self.q:
            raise InvalidFieldError(f"{v} does not encode an element of {self}.")
        return v

    def element(self, x: "ElemLike") -> "FieldElem":
        return FieldElem(self, self.value_of(x))

    def from_int(self, k: int) -> int:
        """Image of the integer k under Z -> GF(p) -> GF(q)."""
        return k % self.p

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.f == 1:
            return (a + b) % p
        out, place = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.f == 1:
            return (-a) % p
        out, place = 0, 1
        while a:
            a, d = divmod(a, p)
            out += ((-d) % p) * place
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % self.unit_order])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}.")
        return int(self.exp_table[(-self.log_table[a]) % self.unit_order])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k > 0:
                return 0
            if k == 0:
                return 1
            raise ZeroDivisionError(f"0 has no inverse in {self}.")
        return int(self.exp_table[(int(self.log_table[a]) * k) % self.unit_order])

    def exp(self, t: int) -> int:
        """The element g^t."""
        return int(self.exp_table[t % self.unit_order])

    def discrete_log(self, a: int) -> int:
        if a == 0:
            raise LogOfZeroError(f"0 has no discrete logarithm in {self}.")
        return int(self.log_table[a])

    def trace(self, a: int) -> int:
        """Absolute trace Tr_{k/F_p}(a) as an integer in [0, p)."""
        return int(self.trace_table[a])

    def enumerate_elements(self) -> List[int]:
        """0 first, then g^0, g^1, ..., g^{q-2}."""
        return [0, *self.exp_table.tolist()]

    def enumerate_units(self) -> List[int]:
        return self.exp_table.tolist()

    def parse_element(self, text: str) -> int:
        """Accepts an integer encoding ('4') or a generator power ('g^3')."""
        token = text.strip()
        match = _POWER_SYNTAX.match(token)
        if match:
            return self.exp(int(match.group(1)))
        try:
            v = int(token)
        except ValueError as e:
            raise ParseError(text, 0, "expected an integer or g^k") from e
        if not 0 <= v < self.q:
            raise ParseError(text, 0, f"value outside [0, {self.q})")
        return v


@dataclass(frozen=True)
class FieldElem:
    """An element of a specific field; supports the usual operators."""
    field: FiniteField
    value: int

    @classmethod
    def from_coeffs(cls, field: FiniteField, coeffs: Iterable[int]) -> "FieldElem":
        digits = [int(c) % field.p for c in coeffs]
        if len(digits) > field.f:
            raise InvalidFieldError(
                f"{len(digits)} coefficients given for an element of {field}.")
        return cls(field, field._from_digits(digits))

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(self.field._digits(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def _other(self, other: "ElemLike") -> int:
        return self.field.value_of(other)

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.value, self._other(other)))

    def __pow__(self, k: int):
        return FieldElem(self.field, self.field.pow(self.value, k))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


ElemLike = Union[FieldElem, int]


@lru_cache(maxsize=None)
def _construct(p: int, f: int, modulus: Optional[Tuple[int, ...]]) -> FiniteField:
    return FiniteField(p, f, modulus)


def construct_field(p: int, f: int = 1,
                    modulus: Optional[Sequence[int]] = None) -> FiniteField:
    """
    Builds (or returns the cached) field GF(p^f).

    Args:
        p (int): The characteristic; must be prime.
        f (int): Extension degree.
        modulus (Sequence[int], optional): Monic irreducible coefficients,
            lowest degree first. Defaults to the lexicographically smallest.

    Raises:
        NotPrimeError, FieldTooLargeError, ReducibleModulusError
    """
    return _construct(p, f, tuple(modulus) if modulus is not None else None)


def field_from_q(q: int) -> FiniteField:
    """Resolves a field order to GF(q) with the default modulus."""
    if q < 2:
        raise InvalidFieldError(f"{q} is not a prime power.")
    factors = factorint(q)
    if len(factors) != 1:
        raise InvalidFieldError(f"{q} is not a prime power.")
    (p, f), = factors.items()
    return construct_field(int(p), int(f))


def discrete_log(x: FieldElem) -> int:
    return x.field.discrete_log(x.value)


def trace(x: FieldElem) -> int:
    return x.field.trace(x.value)


def enumerate_elements(field: FiniteField) -> List[FieldElem]:
    return [FieldElem(field, v) for v in field.enumerate_elements()]
