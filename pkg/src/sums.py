"""
Gauss sums, Jacobi sums and Pochhammer symbols over a finite field.

g(χ) = -Σ_x ψ(x)χ(x) lives in Q(ζ_m) with m = p(q-1). Every Gauss sum is
kept in sparse group-ring form, a list of (exponent of ζ_m, weight), so that
a product of Gauss sums and inverse Gauss sums is accumulated in
Z[x]/(x^m - 1) and reduced once. Inverses never go through generic field
inversion: 1/g(χ) = q^{δ(χ)-1}·χ(-1)·g(χ̄).
"""
import logging
import threading
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.chars import (AddChar, MultChar, ParamSet, default_psi, delta_char,
                       eval_mult, nth_root_chars, trivial_char)
from src.cyclo import CycloNum, SparseTerms, group_ring_product
from src.errors import FieldMismatchError, NotDivisorError
from src.gf import FiniteField

logger = logging.getLogger(__name__)

ParamLike = Union[ParamSet, MultChar]
PochhammerTerm = Tuple[ParamLike, MultChar]


class GaussTable:
    """
    Memoized Gauss sums g(χ_j) of one field for one additive character.

    Sparse forms are built on first use of an index and never change, so
    lookups after insertion need no lock.
    """

    def __init__(self, psi: AddChar):
        field = psi.field
        self.field = field
        self.psi = psi
        self.conductor = field.conductor
        n = field.unit_order
        # x = g^t contributes ζ_m^{n·Tr(a·x)} · ζ_m^{p·j·t}
        self._trace_exponents = tuple(
            n * field.trace(field.mul(psi.shift, field.exp(t))) for t in range(n))
        self._sparse: Dict[int, Tuple[Tuple[int, int], ...]] = {0: ((0, 1),)}
        self._values: Dict[int, CycloNum] = {}
        self._lock = threading.Lock()

    def sparse(self, j: int) -> SparseTerms:
        """g(χ_j) as (exponent, weight) pairs over ζ_m."""
        j %= self.field.unit_order
        terms = self._sparse.get(j)
        if terms is None:
            m, p = self.conductor, self.field.p
            counts: Counter = Counter(
                (e + p * j * t) % m for t, e in enumerate(self._trace_exponents))
            terms = tuple(sorted((e, -c) for e, c in counts.items()))
            with self._lock:
                self._sparse.setdefault(j, terms)
        return terms

    def value(self, j: int) -> CycloNum:
        j %= self.field.unit_order
        value = self._values.get(j)
        if value is None:
            vector = group_ring_product(self.conductor, [self.sparse(j)])
            value = CycloNum.from_group_ring(self.conductor, vector)
            with self._lock:
                self._values.setdefault(j, value)
        return value

    def ratio_vector(self, numer: Iterable[int],
                     denom: Iterable[int]) -> Tuple[List[int], Fraction]:
        """
        ∏ g(χ_a) / ∏ g(χ_b) as an unreduced group-ring vector and a rational scale.

        Indices common to both sides cancel before any arithmetic.
        """
        n = self.field.unit_order
        q = self.field.q
        top = Counter(j % n for j in numer)
        bottom = Counter(j % n for j in denom)
        common = top & bottom
        top -= common
        bottom -= common

        factors: List[SparseTerms] = []
        scale = Fraction(1)
        for j, k in top.items():
            if j:
                factors.extend([self.sparse(j)] * k)
        for j, k in bottom.items():
            if j:
                sign = 1 if self.field.p == 2 or j % 2 == 0 else -1
                scale *= Fraction(sign, q) ** k
                factors.extend([self.sparse(-j)] * k)
        return group_ring_product(self.conductor, factors), scale

    def ratio(self, numer: Iterable[int], denom: Iterable[int]) -> CycloNum:
        vector, scale = self.ratio_vector(numer, denom)
        return CycloNum.from_group_ring(self.conductor, vector) * scale


_TABLES: Dict[Tuple[FiniteField, int], GaussTable] = {}
_TABLES_LOCK = threading.Lock()


def gauss_table(psi: Optional[AddChar] = None,
                field: Optional[FiniteField] = None) -> GaussTable:
    """Shared GaussTable for (field, ψ); ψ defaults to ψ_1 of `field`."""
    if psi is None:
        psi = default_psi(field)
    key = (psi.field, psi.shift)
    table = _TABLES.get(key)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.get(key)
            if table is None:
                table = GaussTable(psi)
                _TABLES[key] = table
                logger.debug("Created Gauss table for %r, psi shift %d",
                             psi.field, psi.shift)
    return table


def _table_for(chi: MultChar, psi: Optional[AddChar]) -> GaussTable:
    if psi is not None and psi.field != chi.field:
        raise FieldMismatchError(f"{psi} and {chi} live over different fields.")
    return gauss_table(psi, chi.field)


def _as_paramset(a: ParamLike) -> ParamSet:
    return a if isinstance(a, ParamSet) else ParamSet.of(a.field, [a])


def gauss(chi: MultChar, psi: Optional[AddChar] = None) -> CycloNum:
    return _table_for(chi, psi).value(chi.index)


def gauss0(chi: MultChar, psi: Optional[AddChar] = None) -> CycloNum:
    """g°(χ) = q^{δ(χ)} g(χ)."""
    return gauss(chi, psi) * chi.field.q ** delta_char(chi)


def gauss_inverse(chi: MultChar, psi: Optional[AddChar] = None) -> CycloNum:
    """1/g(χ) = g°(χ̄)·χ(-1)/q."""
    return gauss0(chi.conj(), psi) * Fraction(chi.sign(), chi.field.q)


def quotient_terms(upper: Sequence[PochhammerTerm] = (),
                   lower: Sequence[PochhammerTerm] = (),
                   upper0: Sequence[PochhammerTerm] = (),
                   lower0: Sequence[PochhammerTerm] = ()) -> Tuple[List[int], List[int], int]:
    """
    Gauss-sum indices and power of q for a quotient of Pochhammer symbols.

    Returns (numer, denom, e) with
    ∏(A)_ν ∏(A)°_ν / (∏(B)_ν ∏(B)°_ν) = q^e ∏ g(χ_numer) / ∏ g(χ_denom),
    where `upper`/`lower` take plain symbols and `upper0`/`lower0` the ° variant.
    """
    numer: List[int] = []
    denom: List[int] = []
    exponent = 0
    for terms, on_top, circled in ((upper, True, False), (upper0, True, True),
                                   (lower, False, False), (lower0, False, True)):
        for a, nu in terms:
            n = nu.field.unit_order
            for i in _as_paramset(a).indices:
                shifted = (i + nu.index) % n
                if on_top:
                    numer.append(shifted)
                    denom.append(i)
                else:
                    numer.append(i)
                    denom.append(shifted)
                if circled:
                    drift = (shifted == 0) - (i == 0)
                    exponent += drift if on_top else -drift
    return numer, denom, exponent


def pochhammer_quotient(psi: AddChar, upper: Sequence[PochhammerTerm] = (),
                        lower: Sequence[PochhammerTerm] = (),
                        upper0: Sequence[PochhammerTerm] = (),
                        lower0: Sequence[PochhammerTerm] = ()) -> CycloNum:
    numer, denom, exponent = quotient_terms(upper, lower, upper0, lower0)
    value = gauss_table(psi).ratio(numer, denom)
    return value * Fraction(psi.field.q) ** exponent


def pochhammer(a: ParamLike, nu: MultChar, psi: Optional[AddChar] = None) -> CycloNum:
    """(A)_ν = ∏_{α∈A} g(αν)/g(α)."""
    psi = psi or default_psi(nu.field)
    return pochhammer_quotient(psi, upper=[(a, nu)])


def pochhammer0(a: ParamLike, nu: MultChar, psi: Optional[AddChar] = None) -> CycloNum:
    """(A)°_ν = ∏_{α∈A} g°(αν)/g°(α)."""
    psi = psi or default_psi(nu.field)
    return pochhammer_quotient(psi, upper0=[(a, nu)])


def jacobi(chi: MultChar, chi2: MultChar) -> CycloNum:
    """j(χ, χ') = -Σ_{x+y=1} χ(x)χ'(y), a number in Q(ζ_{q-1})."""
    field = chi.field
    if chi2.field != field:
        raise FieldMismatchError(f"{chi} and {chi2} live over different fields.")
    n = field.unit_order
    vector = [0] * n
    for x in field.enumerate_units():
        y = field.sub(1, x)
        if y:
            e = chi.index * field.discrete_log(x) + chi2.index * field.discrete_log(y)
            vector[e % n] -= 1
    return CycloNum.from_group_ring(n, vector)


def davenport_hasse_sides(chi: MultChar, n: int,
                          psi: Optional[AddChar] = None) -> Tuple[CycloNum, CycloNum]:
    """Both sides of g(χ^n) = χ^n(n)·∏_{φ^n=ε} g(χφ)/g(φ)."""
    field = chi.field
    if n < 1 or field.unit_order % n:
        raise NotDivisorError(f"{n} does not divide q - 1 = {field.unit_order}.")
    table = _table_for(chi, psi)
    roots = nth_root_chars(field, n)
    lhs = table.value((chi ** n).index)
    product = table.ratio([(chi * phi).index for phi in roots],
                          [phi.index for phi in roots])
    rhs = eval_mult(chi ** n, field.from_int(n)) * product
    return lhs, rhs


def check_davenport_hasse(chi: MultChar, n: int, psi: Optional[AddChar] = None) -> bool:
    lhs, rhs = davenport_hasse_sides(chi, n, psi)
    return lhs == rhs


def pochhammer_multiplication_sides(alpha: MultChar, nu: MultChar, n: int,
                                    psi: Optional[AddChar] = None,
                                    circled: bool = False) -> Tuple[CycloNum, CycloNum]:
    """
    Both sides of (α^n)_{ν^n} = ν^n(n)·∏_{φ^n=ε} (αφ)_ν, or of its ° form.
    """
    field = alpha.field
    if n < 1 or field.unit_order % n:
        raise NotDivisorError(f"{n} does not divide q - 1 = {field.unit_order}.")
    psi = psi or default_psi(field)
    shifted = ParamSet.of(field, [alpha * phi for phi in nth_root_chars(field, n)])
    if circled:
        lhs = pochhammer_quotient(psi, upper0=[(alpha ** n, nu ** n)])
        product = pochhammer_quotient(psi, upper0=[(shifted, nu)])
    else:
        lhs = pochhammer_quotient(psi, upper=[(alpha ** n, nu ** n)])
        product = pochhammer_quotient(psi, upper=[(shifted, nu)])
    return lhs, eval_mult(nu ** n, field.from_int(n)) * product


def check_pochhammer_multiplication(alpha: MultChar, nu: MultChar, n: int,
                                    psi: Optional[AddChar] = None) -> bool:
    return all(lhs == rhs for lhs, rhs in (
        pochhammer_multiplication_sides(alpha, nu, n, psi, circled=False),
        pochhammer_multiplication_sides(alpha, nu, n, psi, circled=True)))


def jacobi_gauss_sides(chi: MultChar, chi2: MultChar,
                       psi: Optional[AddChar] = None) -> Tuple[CycloNum, CycloNum]:
    """Both sides of j(χ,χ') = g(χ)g(χ')/g°(χχ') - δ(χ)δ(χ')(1-q)²/q."""
    field = chi.field
    q = field.q
    table = _table_for(chi, psi)
    product = chi * chi2
    rhs = table.ratio([chi.index, chi2.index], [product.index])
    rhs = rhs * Fraction(1, q ** delta_char(product))
    if chi.is_trivial() and chi2.is_trivial():
        rhs = rhs - Fraction((1 - q) ** 2, q)
    return jacobi(chi, chi2), rhs


def jacobi_pochhammer_bridge(alpha: MultChar, beta: MultChar, nu: MultChar,
                             psi: Optional[AddChar] = None) -> Tuple[CycloNum, CycloNum]:
    """
    Both sides of
    j(αν, conj(βν)) = (β)_ᾱ (α)_ν / ((ε)°_ᾱ (β)_ν) · ν(-1) + δ(βν)(1-q).
    """
    field = alpha.field
    psi = psi or default_psi(field)
    lhs = jacobi(alpha * nu, (beta * nu).conj())
    quotient = pochhammer_quotient(
        psi,
        upper=[(beta, alpha.conj()), (alpha, nu)],
        lower=[(beta, nu)],
        lower0=[(trivial_char(field), alpha.conj())])
    rhs = quotient * nu.sign() + (1 - field.q) * delta_char(beta * nu)
    return lhs, rhs
