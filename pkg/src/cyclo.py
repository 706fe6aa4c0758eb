"""
Exact arithmetic in cyclotomic fields Q(ζ_m).

A CycloNum stores an integer coefficient vector in the power basis
1, ζ_m, ..., ζ_m^{φ(m)-1} together with one positive common denominator,
reduced so that gcd(numerators, denominator) = 1. Values of different
conductors meet in Q(ζ_lcm) through `lift`.

Heavy sums (Gauss sums and their products) are accumulated in the group
ring Z[x]/(x^m - 1) and reduced modulo Φ_m once at the end; the
per-conductor reduction rows are cached behind a lock.
"""
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix, cyclotomic_poly
from sympy.ntheory import mobius, totient

from src.constant import APPROX_DIGITS
from src.errors import (CycloDivisionByZero, NotCoprimeError, NotDivisorError,
                        NotInSubfieldError)

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
SparseTerms = Sequence[Tuple[int, int]]


@dataclass(frozen=True)
class _ConductorTables:
    m: int
    phi: int
    # reduction[k]: nonzero (i, c) with x^k ≡ Σ c·x^i mod Φ_m
    reduction: Tuple[Tuple[Tuple[int, int], ...], ...]
    units: Tuple[int, ...]
    # weights w_i with Tr(ζ^i)/φ(m) = w_i, used for hashing across conductors
    trace_weights: Tuple[Fraction, ...]


def _build_tables(m: int) -> _ConductorTables:
    top_first = [int(c) for c in cyclotomic_poly(m, polys=True).all_coeffs()]
    phi = len(top_first) - 1
    low = top_first[::-1][:phi]

    rows = []
    row = [0] * phi
    row[0] = 1
    for _ in range(m):
        rows.append(tuple((i, c) for i, c in enumerate(row) if c))
        carry = row[-1]
        row = [0] + row[:-1]
        if carry:
            for i in range(phi):
                row[i] -= carry * low[i]

    units = tuple(c for c in range(1, max(m, 2)) if gcd(c, m) == 1)
    weights = []
    for i in range(phi):
        d = m // gcd(i, m)
        weights.append(Fraction(int(mobius(d)), int(totient(d))))
    return _ConductorTables(m, phi, tuple(rows), units, tuple(weights))


_TABLES: Dict[int, _ConductorTables] = {}
_TABLES_LOCK = threading.Lock()


def _tables(m: int) -> _ConductorTables:
    tables = _TABLES.get(m)
    if tables is None:
        with _TABLES_LOCK:
            tables = _TABLES.get(m)
            if tables is None:
                tables = _build_tables(m)
                _TABLES[m] = tables
                logger.debug("Cached reduction tables for conductor %d (phi=%d)",
                             m, tables.phi)
    return tables


def _fold(tables: _ConductorTables, acc: Sequence[int]) -> List[int]:
    """Reduces a length-m group-ring vector to power-basis numerators."""
    out = list(acc[:tables.phi])
    reduction = tables.reduction
    for k in range(tables.phi, tables.m):
        c = acc[k]
        if c:
            for i, r in reduction[k]:
                out[i] += c * r
    return out


def _cyclic_convolve(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """Product in Z[x]/(x^m - 1) of two object-dtype coefficient vectors."""
    full = np.convolve(a, b)
    pad = (-len(full)) % m
    if pad:
        full = np.concatenate([full, np.zeros(pad, dtype=object)])
    return full.reshape(-1, m).sum(axis=0)


def group_ring_product(m: int, factors: Iterable[SparseTerms]) -> List[int]:
    """
    Product of sparse factors in Z[x]/(x^m - 1), returned as a dense vector.

    Each factor is a sequence of (exponent, weight) pairs. Object dtype keeps
    the integers exact.
    """
    acc = np.zeros(m, dtype=object)
    acc[0] = 1
    for factor in factors:
        dense = np.zeros(m, dtype=object)
        for e, w in factor:
            dense[e % m] += w
        acc = _cyclic_convolve(acc, dense, m)
    return acc.tolist()


class CycloNum:
    """An element of Q(ζ_m) in normalized integer form. Immutable."""

    __slots__ = ("m", "_num", "_den")

    def __init__(self, m: int, coeffs: Iterable[Union[Scalar, str]] = ()):
        """
        Args:
            m (int): Conductor; the number lives in Q(ζ_m).
            coeffs: Rational coefficients of 1, ζ_m, ζ_m^2, ...; entries past
                φ(m) are reduced using ζ_m^m = 1 and Φ_m(ζ_m) = 0.
        """
        if m < 1:
            raise ValueError(f"Conductor must be positive, got {m}.")
        fracs = [Fraction(c) for c in coeffs]
        den = lcm(*(fr.denominator for fr in fracs))
        acc = [0] * m
        for i, fr in enumerate(fracs):
            acc[i % m] += fr.numerator * (den // fr.denominator)
        self._assign(m, _fold(_tables(m), acc), den)

    def _assign(self, m: int, num: List[int], den: int) -> None:
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = reduce(gcd, num, den)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.m = m
        self._num = tuple(num)
        self._den = den

    @classmethod
    def _raw(cls, m: int, num: List[int], den: int) -> "CycloNum":
        obj = cls.__new__(cls)
        obj._assign(m, num, den)
        return obj

    @classmethod
    def zero(cls, m: int = 1) -> "CycloNum":
        return cls._raw(m, [0] * _tables(m).phi, 1)

    @classmethod
    def rational(cls, value: Scalar, m: int = 1) -> "CycloNum":
        value = Fraction(value)
        num = [0] * _tables(m).phi
        num[0] = value.numerator
        return cls._raw(m, num, value.denominator)

    @classmethod
    def from_group_ring(cls, m: int, vector: Sequence[int],
                        den: int = 1) -> "CycloNum":
        """Σ vector[k]·ζ_m^k / den for a dense length-m integer vector."""
        return cls._raw(m, _fold(_tables(m), vector), den)

    @classmethod
    def from_json(cls, data: dict) -> "CycloNum":
        return cls(int(data["m"]), [Fraction(c) for c in data["coeffs"]])

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def phi(self) -> int:
        return len(self._num)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotInSubfieldError(f"{self} is not rational.")
        return Fraction(self._num[0], self._den)

    def to_json(self) -> dict:
        return {"m": self.m,
                "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    def to_complex(self) -> complex:
        roots = np.exp(2j * np.pi * np.arange(self.phi) / self.m)
        weights = np.array([float(c) for c in self.coeffs])
        return complex(np.dot(weights, roots))

    def approx(self, digits: int = APPROX_DIGITS) -> str:
        z = self.to_complex()
        return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"

    def __repr__(self) -> str:
        return f"CycloNum(m={self.m}, coeffs={[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = f"z{self.m}" if i == 1 else f"z{self.m}^{i}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(terms) if terms else "0"

    # ------------------------------------------------------------------
    # conductor changes
    # ------------------------------------------------------------------

    def lift(self, m: int) -> "CycloNum":
        """The same number written in Q(ζ_m); requires self.m | m."""
        if m % self.m:
            raise NotDivisorError(f"Cannot lift from conductor {self.m} to {m}.")
        if m == self.m:
            return self
        step = m // self.m
        acc = [0] * m
        for i, c in enumerate(self._num):
            if c:
                acc[i * step] = c
        return CycloNum.from_group_ring(m, acc, self._den)

    def lower(self, d: int) -> "CycloNum":
        """Rewrites the number in Q(ζ_d) when it lies in that subfield."""
        if self.m % d:
            raise NotDivisorError(f"{d} does not divide the conductor {self.m}.")
        if d == self.m:
            return self
        if not lies_in_subfield(self, d):
            raise NotInSubfieldError(f"{self} does not lie in Q(zeta_{d}).")
        sub = _tables(d)
        columns = [root_of_unity(d, k).lift(self.m)._num for k in range(sub.phi)]
        basis = Matrix(self.phi, sub.phi, lambda i, j: columns[j][i])
        target = Matrix([c for c in self._num])
        solution, _ = basis.gauss_jordan_solve(target)
        coeffs = [Fraction(int(s.p), int(s.q)) / self._den for s in solution]
        return CycloNum(d, coeffs)

    def _aligned(self, other: "CycloNum") -> Tuple["CycloNum", "CycloNum"]:
        if self.m == other.m:
            return self, other
        m = lcm(self.m, other.m)
        return self.lift(m), other.lift(m)

    # ------------------------------------------------------------------
    # field operations
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["CycloNum"]:
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        den = lcm(a._den, b._den)
        sa, sb = den // a._den, den // b._den
        return CycloNum._raw(a.m, [x * sa + y * sb for x, y in zip(a._num, b._num)], den)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum._raw(self.m, [-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def _scaled(self, value: Fraction) -> "CycloNum":
        return CycloNum._raw(self.m, [c * value.numerator for c in self._num],
                             self._den * value.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.m == 1:
            return self._scaled(other.to_rational())
        if self.m == 1:
            return other._scaled(self.to_rational())
        a, b = self._aligned(other)
        acc = _cyclic_convolve(np.array(a._num, dtype=object),
                               np.array(b._num, dtype=object), a.m)
        return CycloNum.from_group_ring(a.m, acc.tolist(), a._den * b._den)

    __rmul__ = __mul__

    def galois(self, c: int) -> "CycloNum":
        """Applies σ_c: ζ_m -> ζ_m^c."""
        if gcd(c, self.m) != 1:
            raise NotCoprimeError(f"{c} is not a unit modulo {self.m}.")
        m = self.m
        acc = [0] * m
        for i, v in enumerate(self._num):
            if v:
                acc[(i * c) % m] += v
        return CycloNum.from_group_ring(m, acc, self._den)

    def conj(self) -> "CycloNum":
        return self.galois(-1 % self.m if self.m > 1 else 1)

    def norm(self) -> Fraction:
        """Field norm from Q(ζ_m) to Q."""
        result = CycloNum.rational(1)
        for c in _tables(self.m).units:
            result = result * self.galois(c)
        return result.to_rational()

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise CycloDivisionByZero("Division by zero in a cyclotomic field.")
        if self.is_rational():
            return CycloNum.rational(1 / self.to_rational(), self.m)
        others = CycloNum.rational(1)
        for c in _tables(self.m).units:
            if c != 1:
                others = others * self.galois(c)
        norm = (self * others).to_rational()
        return others * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise CycloDivisionByZero("Division by zero in a cyclotomic field.")
            return self._scaled(1 / Fraction(other))
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "CycloNum":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.rational(1, self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ------------------------------------------------------------------
    # comparison
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_rational() == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._aligned(other)
        return a._num == b._num and a._den == b._den

    def __hash__(self) -> int:
        weights = _tables(self.m).trace_weights
        trace = sum((c * w for c, w in zip(self._num, weights) if c), Fraction(0))
        return hash(trace / self._den)

    def __bool__(self) -> bool:
        return not self.is_zero()


def root_of_unity(m: int, k: int = 1) -> CycloNum:
    """ζ_m^k."""
    num = [0] * _tables(m).phi
    for i, c in _tables(m).reduction[k % m]:
        num[i] = c
    return CycloNum._raw(m, num, 1)


def sum_twisted(terms: Iterable[Tuple[CycloNum, int]], m: int) -> CycloNum:
    """
    Σ a_i·ζ_m^{e_i} with a single reduction at the end.

    The result lives in Q(ζ_M) with M the lcm of m and every a_i's conductor.
    """
    terms = list(terms)
    big = reduce(lcm, (a.m for a, _ in terms), m)
    den = reduce(lcm, (a._den for a, _ in terms), 1)
    step = big // m
    acc = [0] * big
    for a, e in terms:
        a = a.lift(big)
        scale = den // a._den
        shift = e * step
        for i, c in enumerate(a._num):
            if c:
                acc[(i + shift) % big] += c * scale
    return CycloNum.from_group_ring(big, acc, den)


def lies_in_subfield(a: CycloNum, d: int, m: Optional[int] = None) -> bool:
    """
    Whether `a` lies in Q(ζ_d), viewed inside Q(ζ_m).

    The ambient conductor defaults to a's own; both a.m and d must divide it.
    Rationals lie in every subfield.
    """
    if m is not None and m % d:
        raise NotDivisorError(f"{d} does not divide the conductor {m}.")
    if a.is_rational():
        return True
    ambient = a.m if m is None else m
    if ambient % d:
        raise NotDivisorError(f"{d} does not divide the conductor {ambient}.")
    x = a.lift(ambient)
    for c in _tables(ambient).units:
        if (c - 1) % d == 0 and c != 1 and x.galois(c) != x:
            return False
    return True


def add(a: CycloNum, b: CycloNum) -> CycloNum:
    return a + b


def sub(a: CycloNum, b: CycloNum) -> CycloNum:
    return a - b


def mul(a: CycloNum, b: CycloNum) -> CycloNum:
    return a * b


def div(a: CycloNum, b: CycloNum) -> CycloNum:
    return a / b


def galois_apply(a: CycloNum, c: int) -> CycloNum:
    return a.galois(c)
