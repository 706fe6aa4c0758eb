"""
Hypergeometric functions over a finite field k.

For parameter sets A, B of multiplicative characters,

    F(A, B; λ) = 1/(1-q) · Σ_ν (A)_ν / (B)°_ν · ν(λ),

summed over all q-1 characters ν, with ν(0) = 0 so that F(A, B; 0) = 0.
The coefficient vector ν ↦ (A)_ν/(B)°_ν is computed once per HgfSpec and
the whole table λ ↦ F(λ) is its inverse Fourier transform on k*.

Also here: Appell's F4 in two variables, the closed-form special values
at λ = 1 and λ = -1, the Pfaff transformation and the shift, exchange and
cancellation relations between F's.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.chars import (AddChar, CharLike, MultChar, ParamSet, default_psi,
                       eval_mult, quadratic_char, trivial_char)
from src.cyclo import CycloNum, sum_twisted
from src.errors import (EvenCharacteristicError, FieldMismatchError,
                        HypothesisViolatedError, XEqualsOneError)
from src.gf import ElemLike, FiniteField
from src.sums import gauss_table, pochhammer_quotient, quotient_terms

logger = logging.getLogger(__name__)

Value = Union[CycloNum, int, Fraction]


@dataclass(frozen=True)
class HgfSpec:
    """The parameters (A, B) of F(A, B; ·) together with the additive character."""
    num: ParamSet
    den: ParamSet
    psi: AddChar

    def __post_init__(self):
        if self.num.field != self.den.field or self.psi.field != self.num.field:
            raise FieldMismatchError("Parameters and additive character must share a field.")

    @classmethod
    def of(cls, field: FiniteField, num: Iterable[CharLike], den: Iterable[CharLike],
           psi: Optional[AddChar] = None) -> "HgfSpec":
        return cls(ParamSet.of(field, num), ParamSet.of(field, den),
                   psi or default_psi(field))

    @classmethod
    def rfs(cls, field: FiniteField, num: Iterable[CharLike], den: Iterable[CharLike],
            psi: Optional[AddChar] = None) -> "HgfSpec":
        """rFs(α_1..α_r; β_1..β_s) = F(α_1+...+α_r, ε+β_1+...+β_s)."""
        return cls.of(field, num, [trivial_char(field), *den], psi)

    @property
    def field(self) -> FiniteField:
        return self.num.field

    @property
    def is_rfs(self) -> bool:
        return self.den.multiplicity(0) > 0

    @property
    def balanced(self) -> bool:
        return self.num.degree == self.den.degree

    def to_dict(self) -> dict:
        return {"num": str(self.num), "den": str(self.den), "psi_shift": self.psi.shift}

    def __str__(self) -> str:
        return f"F({self.num}; {self.den})"


def _as_cyclo(value: Value) -> CycloNum:
    return value if isinstance(value, CycloNum) else CycloNum.rational(value)


# ----------------------------------------------------------------------
# Fourier transform on k* and (k*)^2, indexed by discrete logarithms
# ----------------------------------------------------------------------

def _is_grid(values: Sequence) -> bool:
    return bool(values) and isinstance(values[0], (list, tuple))


def fourier(field: FiniteField, values: Sequence) -> list:
    """
    f̂(ν) = Σ_x f(x) ν̄(x).

    `values[t]` is f(g^t) on k*, or `values[t][s]` is f(g^t, g^s) on (k*)^2;
    the result is indexed the same way by character indices.
    """
    n = field.unit_order
    if _is_grid(values):
        cells = [(_as_cyclo(values[t][s]), t, s) for t in range(n) for s in range(n)]
        return [[sum_twisted(((v, -(j * t + k * s)) for v, t, s in cells), n)
                 for k in range(n)] for j in range(n)]
    points = [_as_cyclo(v) for v in values]
    return [sum_twisted(((v, -j * t) for t, v in enumerate(points)), n)
            for j in range(n)]


def fourier_inverse(field: FiniteField, values: Sequence) -> list:
    """f(x) = |G|^{-1} Σ_ν f̂(ν) ν(x); exact inverse of `fourier`."""
    n = field.unit_order
    if _is_grid(values):
        cells = [(_as_cyclo(values[j][k]), j, k) for j in range(n) for k in range(n)]
        scale = Fraction(1, n * n)
        return [[sum_twisted(((v, j * t + k * s) for v, j, k in cells), n) * scale
                 for s in range(n)] for t in range(n)]
    points = [_as_cyclo(v) for v in values]
    return [sum_twisted(((v, j * t) for j, v in enumerate(points)), n) * Fraction(1, n)
            for t in range(n)]


# ----------------------------------------------------------------------
# F(A, B; λ)
# ----------------------------------------------------------------------

@lru_cache(maxsize=4096)
def coefficients(spec: HgfSpec) -> Tuple[CycloNum, ...]:
    """c_j = (A)_{χ_j} / (B)°_{χ_j} for j = 0..q-2."""
    field = spec.field
    table = gauss_table(spec.psi)
    q = Fraction(field.q)
    out = []
    for j in range(field.unit_order):
        nu = MultChar(field, j)
        numer, denom, exponent = quotient_terms(upper=[(spec.num, nu)],
                                                lower0=[(spec.den, nu)])
        out.append(table.ratio(numer, denom) * q ** exponent)
    return tuple(out)


def hgf_eval(spec: HgfSpec, lam: ElemLike) -> CycloNum:
    field = spec.field
    v = field.value_of(lam)
    if v == 0:
        return CycloNum.zero()
    t = field.discrete_log(v)
    total = sum_twisted(((c, j * t) for j, c in enumerate(coefficients(spec))),
                        field.unit_order)
    return total * Fraction(1, 1 - field.q)


@lru_cache(maxsize=1024)
def hgf_table(spec: HgfSpec) -> Tuple[CycloNum, ...]:
    """F(A, B; x) for every x, indexed by the integer encoding of x."""
    field = spec.field
    values = [CycloNum.zero()] * field.q
    for t, f in enumerate(fourier_inverse(field, coefficients(spec))):
        values[field.exp(t)] = -f
    return tuple(values)


def rfs_eval(field: FiniteField, num: Iterable[CharLike], den: Iterable[CharLike],
             lam: ElemLike, psi: Optional[AddChar] = None) -> CycloNum:
    return hgf_eval(HgfSpec.rfs(field, num, den, psi), lam)


# ----------------------------------------------------------------------
# Appell F4
# ----------------------------------------------------------------------

@lru_cache(maxsize=256)
def f4_coefficients(alpha: MultChar, beta: MultChar, gamma: MultChar,
                    gamma2: MultChar, psi: AddChar) -> Tuple[Tuple[CycloNum, ...], ...]:
    """c[j][k] = (α+β)_{χ_j χ_k} / ((ε+γ)°_{χ_j} (ε+γ')°_{χ_k})."""
    field = alpha.field
    eps = trivial_char(field)
    upper = ParamSet.of(field, [alpha, beta])
    left = ParamSet.of(field, [eps, gamma])
    right = ParamSet.of(field, [eps, gamma2])
    table = gauss_table(psi)
    q = Fraction(field.q)
    rows = []
    for j in range(field.unit_order):
        nu = MultChar(field, j)
        row = []
        for k in range(field.unit_order):
            nu2 = MultChar(field, k)
            numer, denom, exponent = quotient_terms(
                upper=[(upper, nu * nu2)], lower0=[(left, nu), (right, nu2)])
            row.append(table.ratio(numer, denom) * q ** exponent)
        rows.append(tuple(row))
    return tuple(rows)


def appell_f4(alpha: MultChar, beta: MultChar, gamma: MultChar, gamma2: MultChar,
              lam: ElemLike, lam2: ElemLike, psi: Optional[AddChar] = None) -> CycloNum:
    """
    F4(α, β; γ, γ'; λ, λ') = 1/(1-q)^2 Σ_{ν,ν'} (α+β)_{νν'} / ((ε+γ)°_ν (ε+γ')°_ν') ν(λ)ν'(λ').
    """
    field = alpha.field
    psi = psi or default_psi(field)
    x, y = field.value_of(lam), field.value_of(lam2)
    if x == 0 or y == 0:
        return CycloNum.zero()
    t, s = field.discrete_log(x), field.discrete_log(y)
    coeffs = f4_coefficients(alpha, beta, gamma, gamma2, psi)
    n = field.unit_order
    terms = ((coeffs[j][k], j * t + k * s) for j in range(n) for k in range(n))
    return sum_twisted(terms, n) * Fraction(1, (1 - field.q) ** 2)


@lru_cache(maxsize=64)
def appell_f4_table(alpha: MultChar, beta: MultChar, gamma: MultChar, gamma2: MultChar,
                    psi: AddChar) -> Tuple[Tuple[CycloNum, ...], ...]:
    """F4 on all of k², indexed [x][y] by integer encodings."""
    field = alpha.field
    grid = fourier_inverse(field, f4_coefficients(alpha, beta, gamma, gamma2, psi))
    zero = CycloNum.zero()
    rows = [[zero] * field.q for _ in range(field.q)]
    # (1-q)^2 = n^2 cancels the inverse transform's normalization
    for t, row in enumerate(grid):
        for s, value in enumerate(row):
            rows[field.exp(t)][field.exp(s)] = value
    return tuple(tuple(row) for row in rows)


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------

def euler_gauss_2f1_at_1(alpha: MultChar, beta: MultChar, gamma: MultChar,
                         psi: Optional[AddChar] = None) -> CycloNum:
    """₂F₁(α, β; γ; 1) in closed form."""
    field = alpha.field
    psi = psi or default_psi(field)
    q = field.q
    eps = trivial_char(field)
    if ParamSet.of(field, [alpha, beta]) == ParamSet.of(field, [eps, gamma]):
        return CycloNum.rational(1 + q ** (1 if gamma.is_trivial() else 0) * (1 - q))
    # g°(γ) g(ᾱβ̄γ) / (g°(ᾱγ) g°(β̄γ))
    rest = gamma / alpha / beta
    left, right = gamma / alpha, gamma / beta
    exponent = int(gamma.is_trivial()) - int(left.is_trivial()) - int(right.is_trivial())
    value = gauss_table(psi).ratio([gamma.index, rest.index], [left.index, right.index])
    return value * Fraction(q) ** exponent


def _square_roots(alpha: MultChar) -> Tuple[MultChar, MultChar]:
    """The two characters α' with α'^2 = α^2."""
    return alpha, alpha * quadratic_char(alpha.field)


def _require_odd(field: FiniteField, name: str) -> None:
    if field.p == 2:
        raise EvenCharacteristicError(f"{name} needs odd characteristic; got {field}.")


def kummer_2f1_at_minus1(alpha: MultChar, beta: MultChar,
                         psi: Optional[AddChar] = None) -> CycloNum:
    """₂F₁(α², β; α²β̄; -1) = Σ_{α'^2=α^2} g°(α²β̄) g(α') / (g(α²) g°(α'β̄))."""
    field = alpha.field
    _require_odd(field, "kummer_2f1_at_minus1")
    psi = psi or default_psi(field)
    table = gauss_table(psi)
    square = alpha ** 2
    top = square / beta
    total = CycloNum.zero()
    for root in _square_roots(alpha):
        low = root / beta
        exponent = int(top.is_trivial()) - int(low.is_trivial())
        term = table.ratio([top.index, root.index], [square.index, low.index])
        total = total + term * Fraction(field.q) ** exponent
    return total


def dixon_hypothesis(alpha: MultChar, beta: MultChar, gamma: MultChar) -> Optional[str]:
    """The first violated clause of the ₃F₂(1) closed form, or None."""
    field = alpha.field
    if alpha ** 2 == beta * gamma:
        return "alpha^2 != beta*gamma"
    eps = trivial_char(field)
    pair = ParamSet.of(field, [beta, gamma])
    for root in _square_roots(alpha):
        if pair == ParamSet.of(field, [eps, root]):
            return f"beta+gamma != eps+{root}"
    return None


def dixon_3f2_at_1(alpha: MultChar, beta: MultChar, gamma: MultChar,
                   psi: Optional[AddChar] = None) -> CycloNum:
    """
    ₃F₂(α², β, γ; α²β̄, α²γ̄; 1) in closed form.

    Raises:
        EvenCharacteristicError: In characteristic 2.
        HypothesisViolatedError: Names the failing clause.
    """
    field = alpha.field
    _require_odd(field, "dixon_3f2_at_1")
    clause = dixon_hypothesis(alpha, beta, gamma)
    if clause:
        raise HypothesisViolatedError(clause)
    psi = psi or default_psi(field)
    table = gauss_table(psi)
    square = alpha ** 2
    sq_b, sq_c, sq_bc = square / beta, square / gamma, square / beta / gamma
    total = CycloNum.zero()
    for root in _square_roots(alpha):
        r_b, r_c, r_bc = root / beta, root / gamma, root / beta / gamma
        exponent = (int(sq_b.is_trivial()) + int(sq_c.is_trivial())
                    - int(r_b.is_trivial()) - int(r_c.is_trivial()))
        term = table.ratio([sq_b.index, sq_c.index, root.index, r_bc.index],
                           [square.index, sq_bc.index, r_b.index, r_c.index])
        total = total + term * Fraction(field.q) ** exponent
    return total


def dixon_spec(alpha: MultChar, beta: MultChar, gamma: MultChar,
               psi: Optional[AddChar] = None) -> HgfSpec:
    """The ₃F₂ whose value at 1 `dixon_3f2_at_1` returns."""
    square = alpha ** 2
    return HgfSpec.rfs(alpha.field, [square, beta, gamma],
                       [square / beta, square / gamma], psi)


def pfaff_sides(alpha: MultChar, beta: MultChar, gamma: MultChar, x: ElemLike,
                psi: Optional[AddChar] = None) -> Tuple[CycloNum, CycloNum]:
    """Both sides of ₂F₁(α, β̄γ; γ; x) = ᾱ(1-x) ₂F₁(α, β; γ; x/(x-1))."""
    field = alpha.field
    v = field.value_of(x)
    if v == 1:
        raise XEqualsOneError("The Pfaff transformation is undefined at x = 1.")
    lhs = hgf_table(HgfSpec.rfs(field, [alpha, gamma / beta], [gamma], psi))[v]
    moved = field.div(v, field.sub(v, 1))
    rhs = eval_mult(alpha.conj(), field.sub(1, v)) * \
        hgf_table(HgfSpec.rfs(field, [alpha, beta], [gamma], psi))[moved]
    return lhs, rhs


def pfaff_transform_check(alpha: MultChar, beta: MultChar, gamma: MultChar,
                          x: ElemLike, psi: Optional[AddChar] = None) -> bool:
    lhs, rhs = pfaff_sides(alpha, beta, gamma, x, psi)
    return lhs == rhs


# ----------------------------------------------------------------------
# relations between F's
# ----------------------------------------------------------------------

def shift_sides(spec: HgfSpec, chi: MultChar, lam: ElemLike) -> Tuple[CycloNum, CycloNum]:
    """Both sides of F(A, B; λ) = (A)_χ/(B)°_χ · χ(λ) · F(Aχ, Bχ; λ)."""
    shifted = HgfSpec(spec.num.shift(chi), spec.den.shift(chi), spec.psi)
    factor = pochhammer_quotient(spec.psi, upper=[(spec.num, chi)],
                                 lower0=[(spec.den, chi)])
    v = spec.field.value_of(lam)
    return hgf_table(spec)[v], factor * eval_mult(chi, v) * hgf_table(shifted)[v]


def exchange_sides(spec: HgfSpec, lam: ElemLike) -> Tuple[CycloNum, CycloNum]:
    """
    Both sides of F(B, A; λ) = F(Ā, B̄; (-1)^{deg(A+B)} λ^{-1}), for λ ≠ 0,
    where spec = (A, B).
    """
    field = spec.field
    v = field.value_of(lam)
    swapped = HgfSpec(spec.den, spec.num, spec.psi)
    conjugated = HgfSpec(spec.num.conj(), spec.den.conj(), spec.psi)
    point = field.inv(v)
    if (spec.num.degree + spec.den.degree) % 2:
        point = field.neg(point)
    return hgf_table(swapped)[v], hgf_table(conjugated)[point]


def cancellation_sides(spec: HgfSpec, extra: ParamSet,
                       lam: ElemLike) -> Tuple[CycloNum, CycloNum]:
    """
    Both sides of the cancellation relation for a common part Γ:

        F(A+Γ, B+Γ; λ) = q^{(Γ,ε)} ( F(A, B; λ)
            + q^{-1} Σ_ν (1 - q^{-(Γ,ν)}) / (1 - q^{-1}) · c(ν̄) ν̄(λ) ),

    where c(ν) = (A)_ν/(B)°_ν are the coefficients of F(A, B).
    """
    field = spec.field
    q = field.q
    v = field.value_of(lam)
    n = field.unit_order
    lhs = hgf_table(HgfSpec(spec.num + extra, spec.den + extra, spec.psi))[v]
    base = hgf_table(spec)[v]
    if v == 0:
        correction = CycloNum.zero()
    else:
        t = field.discrete_log(v)
        coeffs = coefficients(spec)
        terms = []
        for j in range(n):
            hits = extra.multiplicity(j)
            if hits:
                weight = (1 - Fraction(1, q) ** hits) / (1 - Fraction(1, q))
                terms.append((coeffs[-j % n] * weight, -j * t))
        correction = sum_twisted(terms, n) * Fraction(1, q) if terms else CycloNum.zero()
    rhs = (base + correction) * q ** extra.multiplicity(0)
    return lhs, rhs


def direct_values(spec: HgfSpec, points: Iterable[ElemLike]) -> List[CycloNum]:
    table = hgf_table(spec)
    return [table[spec.field.value_of(x)] for x in points]
