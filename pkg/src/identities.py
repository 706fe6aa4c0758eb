"""
The identity catalog.

Each entry is a class holding a hypothesis predicate over parameter tuples,
the range of the free variable, and exact evaluators for both sides.
Parameter tuples are plain integers (character indices mod q-1), or tuples
of indices where an entry ranges over parameter sets, so they pickle
cheaply and serialize directly into reports.
"""
import itertools
import logging
import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Type

from sympy import divisors

from src.chars import AddChar, MultChar, ParamSet, eval_add, eval_mult
from src.constant import DEFAULT_PSI_SHIFT, IdentityId, PointDomain
from src.cyclo import CycloNum
from src.errors import UnknownIdentityError
from src.gf import FiniteField
from src.hgf import (HgfSpec, appell_f4, appell_f4_table, cancellation_sides,
                     dixon_3f2_at_1, dixon_hypothesis, dixon_spec,
                     euler_gauss_2f1_at_1, exchange_sides, hgf_table,
                     kummer_2f1_at_minus1, pfaff_sides, shift_sides)
from src.sums import (davenport_hasse_sides, gauss, gauss0, gauss_table,
                      jacobi_gauss_sides, jacobi_pochhammer_bridge, pochhammer,
                      pochhammer0, pochhammer_multiplication_sides)

logger = logging.getLogger(__name__)

Params = Tuple
Point = object


class IdentityContext:
    """Field-level helpers shared by every catalog entry."""

    def __init__(self, field: FiniteField, psi_shift: int = DEFAULT_PSI_SHIFT):
        self.field = field
        self.psi = AddChar(field, psi_shift)
        self.q = field.q
        self.n = field.unit_order
        self.phi = self.n // 2 if field.p != 2 else None
        self.rho = self.n // 3 if self.n % 3 == 0 else None

    def char(self, j: int) -> MultChar:
        return MultChar(self.field, j)

    def chi(self, j: int, x: int) -> CycloNum:
        return eval_mult(self.char(j), x)

    def psi_at(self, x: int) -> CycloNum:
        return eval_add(self.psi, x)

    def paramset(self, indices: Iterable[int]) -> ParamSet:
        return ParamSet.of(self.field, indices)

    def pairing(self, a: Iterable[int], b: Iterable[int]) -> int:
        return self.paramset(a).pairing(self.paramset(b))

    def spec(self, num: Iterable[int], den: Iterable[int]) -> HgfSpec:
        return HgfSpec(self.paramset(num), self.paramset(den), self.psi)

    def F(self, num: Iterable[int], den: Iterable[int]) -> Tuple[CycloNum, ...]:
        """Table of F(num, den; ·) indexed by element encoding."""
        return hgf_table(self.spec(num, den))

    def rF(self, num: Iterable[int], den: Iterable[int]) -> Tuple[CycloNum, ...]:
        """Table of rFs(num; den; ·), the trivial character adjoined below."""
        return hgf_table(self.spec(num, [0, *den]))

    def times(self, x: int, a: int, b: int = 1) -> int:
        """x·a/b in k for integers a, b."""
        f = self.field
        return f.div(f.mul(x, f.from_int(a)), f.from_int(b))

    def square(self, x: int) -> int:
        return self.field.mul(x, x)

    def one_minus(self, x: int) -> int:
        return self.field.sub(1, x)

    def neg(self, x: int) -> int:
        return self.field.neg(x)

    def gauss_quotient(self, numer0: Sequence[int], denom: Sequence[int]) -> CycloNum:
        """∏ g°(χ_a) / ∏ g(χ_b)."""
        exponent = sum(1 for a in numer0 if a % self.n == 0)
        value = gauss_table(self.psi).ratio(numer0, denom)
        return value * self.q ** exponent


def delta_at(x: int) -> int:
    """Characteristic function of 0 on k."""
    return 1 if x == 0 else 0


class Identity:
    """
    Base catalog entry.

    Subclasses set the class attributes and implement `lhs`/`rhs`; the
    defaults enumerate all `arity`-tuples of character indices.
    """
    identity_id: IdentityId
    formula: str = ""
    arity: int = 1
    domain: PointDomain = PointDomain.LINE
    requires_odd: bool = False
    divisor: int = 1
    # integers a whose image in k is removed from the line
    excluded: Tuple[int, ...] = ()

    @classmethod
    def precondition(cls, ctx: IdentityContext) -> Optional[str]:
        """Why the identity does not apply to this field, or None."""
        if cls.requires_odd and ctx.field.p == 2:
            return "p=2"
        if ctx.n % cls.divisor:
            return f"{cls.divisor} ∤ q−1"
        return None

    @classmethod
    def candidates(cls, ctx: IdentityContext) -> Iterable[Params]:
        return itertools.product(range(ctx.n), repeat=cls.arity)

    @classmethod
    def hypothesis(cls, ctx: IdentityContext, params: Params) -> bool:
        return True

    @classmethod
    def points(cls, ctx: IdentityContext, params: Params) -> List[Point]:
        q = ctx.q
        if cls.domain is PointDomain.CHARACTER:
            return [None]
        if cls.domain is PointDomain.PLANE:
            return [(x, y) for x in range(q) for y in range(q) if x != 1 and y != 1]
        skip = {ctx.field.from_int(a) for a in cls.excluded}
        return [x for x in range(q) if x not in skip]

    @classmethod
    def lhs(cls, ctx: IdentityContext, params: Params, point: Point) -> CycloNum:
        raise NotImplementedError

    @classmethod
    def rhs(cls, ctx: IdentityContext, params: Params, point: Point) -> CycloNum:
        raise NotImplementedError

    @classmethod
    def perturb(cls, ctx: IdentityContext, params: Params) -> Params:
        """The tuple with its first character index moved by one."""
        out = list(params)
        for i, value in enumerate(out):
            if isinstance(value, tuple):
                if value:
                    out[i] = ((value[0] + 1) % ctx.n, *value[1:])
                    return tuple(out)
            else:
                out[i] = (value + 1) % ctx.n
                return tuple(out)
        return params

    @classmethod
    def perturbed_rhs(cls, ctx: IdentityContext, params: Params, point: Point) -> CycloNum:
        """The right side after a one-step mutation of its inputs."""
        return cls.rhs(ctx, cls.perturb(ctx, params), point)


def paramset_pairs(ctx: IdentityContext, extra: bool = True) -> List[Tuple[tuple, tuple]]:
    """
    Parameter-set pairs for the shift, exchange and cancellation entries.

    All (A, B) with deg A <= 1 and B = ε or ε + b, then, with `extra`, a
    fixed pseudo-random batch of higher-degree pairs seeded by q.
    """
    n = ctx.n
    numerators = [()] + [(a,) for a in range(n)]
    denominators = [(0,)] + [tuple(sorted((0, b))) for b in range(n)]
    pairs = [(a, b) for a in numerators for b in denominators]
    if extra:
        rng = random.Random(ctx.q)
        for _ in range(2 * n):
            a = tuple(sorted(rng.randrange(n) for _ in range(rng.choice((2, 3)))))
            b = tuple(sorted(rng.randrange(n) for _ in range(rng.choice((1, 2, 3)))))
            pairs.append((a, b))
    return pairs


# ----------------------------------------------------------------------
# Gauss, Jacobi and Pochhammer relations
# ----------------------------------------------------------------------

class PochhammerProduct(Identity):
    identity_id = IdentityId.POCHHAMMER_PRODUCT
    formula = "(α)_{βν} = (α)_β (αβ)_ν"
    arity = 3
    domain = PointDomain.CHARACTER

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b, nu = params
        return pochhammer(ctx.char(a), ctx.char(b + nu), ctx.psi)

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b, nu = params
        return (pochhammer(ctx.char(a), ctx.char(b), ctx.psi)
                * pochhammer(ctx.char(a + b), ctx.char(nu), ctx.psi))


class GaussReflection(Identity):
    identity_id = IdentityId.GAUSS_REFLECTION
    formula = "g(χ) g°(χ̄) = q χ(−1)"
    domain = PointDomain.CHARACTER

    @classmethod
    def lhs(cls, ctx, params, point):
        chi = ctx.char(params[0])
        return gauss(chi, ctx.psi) * gauss0(chi.conj(), ctx.psi)

    @classmethod
    def rhs(cls, ctx, params, point):
        return CycloNum.rational(ctx.q * ctx.char(params[0]).sign())


class PochhammerReflection(Identity):
    identity_id = IdentityId.POCHHAMMER_REFLECTION
    formula = "(α)_ν (ᾱ)°_ν̄ = ν(−1)"
    arity = 2
    domain = PointDomain.CHARACTER

    @classmethod
    def lhs(cls, ctx, params, point):
        a, nu = params
        return (pochhammer(ctx.char(a), ctx.char(nu), ctx.psi)
                * pochhammer0(ctx.char(-a), ctx.char(-nu), ctx.psi))

    @classmethod
    def rhs(cls, ctx, params, point):
        return CycloNum.rational(ctx.char(params[1]).sign())

    @classmethod
    def perturb(cls, ctx, params):
        a, nu = params
        return (a, (nu + 1) % ctx.n)


class DavenportHasse(Identity):
    identity_id = IdentityId.DAVENPORT_HASSE
    formula = "g(χ^d) = χ^d(d) ∏_{φ^d=ε} g(χφ)/g(φ),  d | q−1"
    arity = 2
    domain = PointDomain.CHARACTER

    @classmethod
    def candidates(cls, ctx):
        return itertools.product(range(ctx.n), divisors(ctx.n))

    @classmethod
    def lhs(cls, ctx, params, point):
        j, d = params
        return davenport_hasse_sides(ctx.char(j), d, ctx.psi)[0]

    @classmethod
    def rhs(cls, ctx, params, point):
        j, d = params
        return davenport_hasse_sides(ctx.char(j), d, ctx.psi)[1]


class PochhammerMultiplication(Identity):
    identity_id = IdentityId.POCHHAMMER_MULTIPLICATION
    formula = "(α^d)_{ν^d} = ν^d(d) ∏_{φ^d=ε} (αφ)_ν, and the ° form"
    arity = 4
    domain = PointDomain.CHARACTER

    @classmethod
    def candidates(cls, ctx):
        return itertools.product(range(ctx.n), range(ctx.n), divisors(ctx.n), (0, 1))

    @classmethod
    def _sides(cls, ctx, params):
        a, nu, d, circled = params
        return pochhammer_multiplication_sides(ctx.char(a), ctx.char(nu), d,
                                               ctx.psi, circled=bool(circled))

    @classmethod
    def lhs(cls, ctx, params, point):
        return cls._sides(ctx, params)[0]

    @classmethod
    def rhs(cls, ctx, params, point):
        return cls._sides(ctx, params)[1]


class JacobiGauss(Identity):
    identity_id = IdentityId.JACOBI_GAUSS
    formula = "j(χ,χ') = g(χ)g(χ')/g°(χχ') − δ(χ)δ(χ')(1−q)²/q"
    arity = 2
    domain = PointDomain.CHARACTER

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        return jacobi_gauss_sides(ctx.char(a), ctx.char(b), ctx.psi)[0]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        return jacobi_gauss_sides(ctx.char(a), ctx.char(b), ctx.psi)[1]


class JacobiPochhammer(Identity):
    identity_id = IdentityId.JACOBI_POCHHAMMER
    formula = "j(αν, conj(βν)) = (β)_ᾱ(α)_ν/((ε)°_ᾱ(β)_ν) ν(−1) + δ(βν)(1−q)"
    arity = 3
    domain = PointDomain.CHARACTER

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b, nu = params
        return jacobi_pochhammer_bridge(ctx.char(a), ctx.char(b), ctx.char(nu), ctx.psi)[0]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b, nu = params
        return jacobi_pochhammer_bridge(ctx.char(a), ctx.char(b), ctx.char(nu), ctx.psi)[1]


# ----------------------------------------------------------------------
# values and relations of F
# ----------------------------------------------------------------------

class ExponentialValue(Identity):
    identity_id = IdentityId.EXPONENTIAL_VALUE
    formula = "₀F₀(λ) = ψ(−λ),  λ ≠ 0"
    arity = 0
    excluded = (0,)

    @classmethod
    def lhs(cls, ctx, params, point):
        return ctx.rF([], [])[point]

    @classmethod
    def rhs(cls, ctx, params, point):
        return ctx.psi_at(ctx.neg(point))

    @classmethod
    def perturbed_rhs(cls, ctx, params, point):
        f = ctx.field
        other = AddChar(f, f.mul(ctx.psi.shift, f.generator))
        return eval_add(other, ctx.neg(point))


class BinomialValue(Identity):
    identity_id = IdentityId.BINOMIAL_VALUE
    formula = "₁F₀(α; λ) = ᾱ(1−λ),  α ≠ ε, λ ≠ 0"
    excluded = (0,)

    @classmethod
    def hypothesis(cls, ctx, params):
        return params[0] != 0

    @classmethod
    def lhs(cls, ctx, params, point):
        return ctx.rF([params[0]], [])[point]

    @classmethod
    def rhs(cls, ctx, params, point):
        return ctx.chi(-params[0], ctx.one_minus(point))


class Shift(Identity):
    identity_id = IdentityId.SHIFT
    formula = "F(A,B;λ) = (A)_χ/(B)°_χ χ(λ) F(Aχ,Bχ;λ),  λ ≠ 0"
    arity = 3
    excluded = (0,)

    @classmethod
    def candidates(cls, ctx):
        for a, b in paramset_pairs(ctx):
            for chi in range(ctx.n):
                yield (a, b, chi)

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b, chi = params
        return shift_sides(ctx.spec(a, b), ctx.char(chi), point)[0]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b, chi = params
        return shift_sides(ctx.spec(a, b), ctx.char(chi), point)[1]


class Exchange(Identity):
    identity_id = IdentityId.EXCHANGE
    formula = "F(B,A;λ) = F(Ā,B̄;(−1)^{deg(A+B)} λ⁻¹),  λ ≠ 0"
    arity = 2
    excluded = (0,)

    @classmethod
    def candidates(cls, ctx):
        return paramset_pairs(ctx)

    @classmethod
    def lhs(cls, ctx, params, point):
        return exchange_sides(ctx.spec(*params), point)[0]

    @classmethod
    def rhs(cls, ctx, params, point):
        return exchange_sides(ctx.spec(*params), point)[1]


class Cancellation(Identity):
    identity_id = IdentityId.CANCELLATION
    formula = "F(A+Γ,B+Γ;λ) = q^{(Γ,ε)}(F(A,B;λ) + q⁻¹ Σ_ν (1−q^{−(Γ,ν)})/(1−q⁻¹) (A)_ν̄/(B)°_ν̄ ν̄(λ))"
    arity = 3

    @classmethod
    def candidates(cls, ctx):
        for a, b in paramset_pairs(ctx, extra=False):
            for gamma in range(ctx.n):
                yield (a, b, (gamma,))

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b, extra = params
        return cancellation_sides(ctx.spec(a, b), ctx.paramset(extra), point)[0]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b, extra = params
        return cancellation_sides(ctx.spec(a, b), ctx.paramset(extra), point)[1]


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------

class EulerGaussSum(Identity):
    identity_id = IdentityId.EULER_GAUSS_SUM
    formula = "₂F₁(α,β;γ;1) = g°(γ)g(ᾱβ̄γ)/(g°(ᾱγ)g°(β̄γ)), or 1+q^{δ(γ)}(1−q) if α+β = ε+γ"
    arity = 3
    domain = PointDomain.CHARACTER

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b, c = params
        return ctx.rF([a, b], [c])[1]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b, c = params
        return euler_gauss_2f1_at_1(ctx.char(a), ctx.char(b), ctx.char(c), ctx.psi)


class KummerSum(Identity):
    identity_id = IdentityId.KUMMER_SUM
    formula = "₂F₁(α²,β;α²β̄;−1) = Σ_{α'²=α²} g°(α²β̄)g(α')/(g(α²)g°(α'β̄))"
    arity = 2
    domain = PointDomain.CHARACTER
    requires_odd = True

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        return ctx.rF([2 * a, b], [2 * a - b])[ctx.neg(1)]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        return kummer_2f1_at_minus1(ctx.char(a), ctx.char(b), ctx.psi)


class DixonSum(Identity):
    identity_id = IdentityId.DIXON_SUM
    formula = "₃F₂(α²,β,γ;α²β̄,α²γ̄;1) in closed form"
    arity = 3
    domain = PointDomain.CHARACTER
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        return dixon_hypothesis(*(ctx.char(j) for j in params)) is None

    @classmethod
    def lhs(cls, ctx, params, point):
        alpha, beta, gamma = (ctx.char(j) for j in params)
        return hgf_table(dixon_spec(alpha, beta, gamma, ctx.psi))[1]

    @classmethod
    def rhs(cls, ctx, params, point):
        alpha, beta, gamma = (ctx.char(j) for j in params)
        return dixon_3f2_at_1(alpha, beta, gamma, ctx.psi)


class Pfaff(Identity):
    identity_id = IdentityId.PFAFF
    formula = "₂F₁(α,β̄γ;γ;x) = ᾱ(1−x) ₂F₁(α,β;γ;x/(x−1)),  x ≠ 1, (α+β, ε+γ) = 0"
    arity = 3
    excluded = (1,)

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b, c = params
        return ctx.pairing([a, b], [0, c]) == 0

    @classmethod
    def lhs(cls, ctx, params, point):
        alpha, beta, gamma = (ctx.char(j) for j in params)
        return pfaff_sides(alpha, beta, gamma, point, ctx.psi)[0]

    @classmethod
    def rhs(cls, ctx, params, point):
        alpha, beta, gamma = (ctx.char(j) for j in params)
        return pfaff_sides(alpha, beta, gamma, point, ctx.psi)[1]


# ----------------------------------------------------------------------
# product formulas in one variable
# ----------------------------------------------------------------------

class KummerExponential(Identity):
    identity_id = IdentityId.KUMMER_EXPONENTIAL
    formula = "ψ(λ) ₁F₁(α;β;λ) = ₁F₁(ᾱβ;β;−λ),  (α, β+ε) = 0"
    arity = 2

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b = params
        return ctx.pairing([a], [b, 0]) == 0

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        return ctx.psi_at(point) * ctx.rF([a], [b])[point]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        return ctx.rF([b - a], [b])[ctx.neg(point)]


class QuadraticArgument(Identity):
    identity_id = IdentityId.QUADRATIC_ARGUMENT
    formula = "ψ(λ/2) ₁F₁(α;α²;λ) = ₀F₁(;αφ;λ²/16),  α ≠ ε"
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        return params[0] != 0

    @classmethod
    def lhs(cls, ctx, params, point):
        a = params[0]
        return ctx.psi_at(ctx.times(point, 1, 2)) * ctx.rF([a], [2 * a])[point]

    @classmethod
    def rhs(cls, ctx, params, point):
        a = params[0]
        return ctx.rF([], [a + ctx.phi])[ctx.times(ctx.square(point), 1, 16)]


class EulerTransformation(Identity):
    identity_id = IdentityId.EULER_TRANSFORMATION
    formula = "αβγ̄(1−λ) ₂F₁(α,β;γ;λ) = ₂F₁(ᾱγ,β̄γ;γ;λ),  λ ≠ 1, (α+β, ε+γ) = 0"
    arity = 3
    excluded = (1,)

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b, c = params
        return ctx.pairing([a, b], [0, c]) == 0

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b, c = params
        return ctx.chi(a + b - c, ctx.one_minus(point)) * ctx.rF([a, b], [c])[point]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b, c = params
        return ctx.rF([c - a, c - b], [c])[point]


class RamanujanProduct(Identity):
    identity_id = IdentityId.RAMANUJAN_PRODUCT
    formula = "₁F₁(α;β²;λ) ₁F₁(α;β²;−λ) = ₂F₃(α,ᾱβ²;β²,β,βφ;λ²/4)"
    arity = 2
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b = params
        return ctx.pairing([a], [0, b, b + ctx.phi, 2 * b]) == 0

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        table = ctx.rF([a], [2 * b])
        return table[point] * table[ctx.neg(point)]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        return ctx.rF([a, 2 * b - a], [2 * b, b, b + ctx.phi])[ctx.times(ctx.square(point), 1, 4)]


def _squares_independent(ctx: IdentityContext, a: int, b: int) -> bool:
    return ctx.pairing([2 * a], [2 * b]) == 0


class BesselProduct(Identity):
    identity_id = IdentityId.BESSEL_PRODUCT
    formula = "₀F₁(;α²;λ) ₀F₁(;β²;λ) = ₂F₃(αβ,αβφ;α²,β²,α²β²;4λ)"
    arity = 2
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b = params
        return _squares_independent(ctx, a, b) and ctx.pairing([2 * a + 2 * b], [0]) == 0

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        return ctx.rF([], [2 * a])[point] * ctx.rF([], [2 * b])[point]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        phi = ctx.phi
        return ctx.rF([a + b, a + b + phi],
                      [2 * a, 2 * b, 2 * a + 2 * b])[ctx.times(point, 4)]


class BesselProductTwisted(BesselProduct):
    identity_id = IdentityId.BESSEL_PRODUCT_TWISTED
    formula = "₀F₁(;α²φ;λ) ₀F₁(;β²φ;λ) = ₂F₃(αβ,αβφ;α²φ,β²φ,α²β²;4λ)"

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        phi = ctx.phi
        return ctx.rF([], [2 * a + phi])[point] * ctx.rF([], [2 * b + phi])[point]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        phi = ctx.phi
        return ctx.rF([a + b, a + b + phi],
                      [2 * a + phi, 2 * b + phi, 2 * a + 2 * b])[ctx.times(point, 4)]


class BesselReflection(Identity):
    identity_id = IdentityId.BESSEL_REFLECTION
    formula = "₀F₁(;α²;λ) ₀F₁(;α²;−λ) = ₀F₃(;α²,α,αφ;−λ²/4)"
    requires_odd = True

    @classmethod
    def lhs(cls, ctx, params, point):
        table = ctx.rF([], [2 * params[0]])
        return table[point] * table[ctx.neg(point)]

    @classmethod
    def rhs(cls, ctx, params, point):
        a = params[0]
        return ctx.rF([], [2 * a, a, a + ctx.phi])[ctx.times(ctx.square(point), -1, 4)]


class BesselConjugateReflection(Identity):
    identity_id = IdentityId.BESSEL_CONJUGATE_REFLECTION
    formula = "₀F₁(;α²;λ) ₀F₁(;ᾱ²;−λ) = q^{δ(α)} ₀F₃(;φ,αφ,ᾱφ;−λ²/4)"
    requires_odd = True

    @classmethod
    def lhs(cls, ctx, params, point):
        a = params[0]
        return ctx.rF([], [2 * a])[point] * ctx.rF([], [-2 * a])[ctx.neg(point)]

    @classmethod
    def rhs(cls, ctx, params, point):
        a = params[0]
        phi = ctx.phi
        value = ctx.rF([], [phi, a + phi, -a + phi])[ctx.times(ctx.square(point), -1, 4)]
        return value * ctx.q ** (1 if a % ctx.n == 0 else 0)


class TwoFZeroProduct(Identity):
    identity_id = IdentityId.TWO_F_ZERO_PRODUCT
    formula = "₂F₀(α²,β²;;λ) ₂F₀(α²,β²;;−λ) = ₄F₁(α²,β²,αβ,αβφ;α²β²;4λ²)"
    arity = 2
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b = params
        return ctx.pairing([2 * a, 2 * b, 2 * a + 2 * b], [0]) == 0

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        table = ctx.rF([2 * a, 2 * b], [])
        return table[point] * table[ctx.neg(point)]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        phi = ctx.phi
        return ctx.rF([2 * a, 2 * b, a + b, a + b + phi],
                      [2 * a + 2 * b])[ctx.times(ctx.square(point), 4)]


class TwoFZeroConjugateProduct(TwoFZeroProduct):
    identity_id = IdentityId.TWO_F_ZERO_CONJUGATE_PRODUCT
    formula = "₂F₀(α²,ᾱ²;;λ) ₂F₀(β²,β̄²;;−λ) = ₄F₁(αβ̄φ,ᾱβφ,αβ,ᾱβ̄;φ;4λ²)"

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b = params
        return super().hypothesis(ctx, params) and _squares_independent(ctx, a, b)

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        return (ctx.rF([2 * a, -2 * a], [])[point]
                * ctx.rF([2 * b, -2 * b], [])[ctx.neg(point)])

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        phi = ctx.phi
        return ctx.rF([a - b + phi, -a + b + phi, a + b, -a - b],
                      [phi])[ctx.times(ctx.square(point), 4)]


class ConfluentConjugateProduct(Identity):
    identity_id = IdentityId.CONFLUENT_CONJUGATE_PRODUCT
    formula = "₁F₁(α;β²;λ) ₁F₁(αβ̄²;β̄²;−λ) = q^{δ(β)} ₂F₃(αβ̄φ,ᾱβφ;φ,βφ,β̄φ;λ²/4)"
    arity = 2
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b = params
        return (ctx.pairing([a], [0, 2 * b]) == 0
                and ctx.pairing([2 * a], [2 * b]) == 0)

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        return ctx.rF([a], [2 * b])[point] * ctx.rF([a - 2 * b], [-2 * b])[ctx.neg(point)]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        phi = ctx.phi
        value = ctx.rF([a - b + phi, -a + b + phi],
                       [phi, b + phi, -b + phi])[ctx.times(ctx.square(point), 1, 4)]
        return value * ctx.q ** (1 if b % ctx.n == 0 else 0)


class ConfluentSquareProduct(Identity):
    identity_id = IdentityId.CONFLUENT_SQUARE_PRODUCT
    formula = "₁F₁(α²;α⁴;λ) ₁F₁(β²;β⁴;−λ) = ₂F₃(αβ,αβφ;α²φ,β²φ,α²β²;λ²/4)"
    arity = 2
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b = params
        return (ctx.pairing([2 * a, 2 * b, 2 * a + 2 * b], [0]) == 0
                and _squares_independent(ctx, a, b))

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        return ctx.rF([2 * a], [4 * a])[point] * ctx.rF([2 * b], [4 * b])[ctx.neg(point)]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        phi = ctx.phi
        return ctx.rF([a + b, a + b + phi],
                      [2 * a + phi, 2 * b + phi, 2 * a + 2 * b])[ctx.times(ctx.square(point), 1, 4)]


class ConfluentSquareProductTwisted(Identity):
    identity_id = IdentityId.CONFLUENT_SQUARE_PRODUCT_TWISTED
    formula = "₁F₁(α²φ;α⁴;λ) ₁F₁(β²φ;β⁴;−λ) = ₂F₃(αβ,αβφ;α²,β²,α²β²;λ²/4)"
    arity = 2
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b = params
        phi = ctx.phi
        return (ctx.pairing([2 * a + phi, 2 * b + phi, 2 * a + 2 * b], [0]) == 0
                and _squares_independent(ctx, a, b))

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        phi = ctx.phi
        return (ctx.rF([2 * a + phi], [4 * a])[point]
                * ctx.rF([2 * b + phi], [4 * b])[ctx.neg(point)])

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        phi = ctx.phi
        return ctx.rF([a + b, a + b + phi],
                      [2 * a, 2 * b, 2 * a + 2 * b])[ctx.times(ctx.square(point), 1, 4)]


class CubicProduct(Identity):
    identity_id = IdentityId.CUBIC_PRODUCT
    formula = ("₀F₂(;α⁶,β⁶;λ) ₀F₂(;α⁶,β⁶;−λ) = "
               "₃F₈(α²β²,α²β²ρ,α²β²ρ̄;α⁶,β⁶,α³,α³φ,β³,β³φ,α³β³,α³β³φ;−27λ²/64)")
    arity = 2
    divisor = 6

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b = params
        return (ctx.pairing([6 * a], [12 * b]) == 0
                and ctx.pairing([12 * a], [6 * b]) == 0
                and ctx.pairing([6 * a + 6 * b], [0]) == 0)

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b = params
        table = ctx.rF([], [6 * a, 6 * b])
        return table[point] * table[ctx.neg(point)]

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b = params
        phi, rho = ctx.phi, ctx.rho
        top = [2 * a + 2 * b, 2 * a + 2 * b + rho, 2 * a + 2 * b - rho]
        bottom = [6 * a, 6 * b, 3 * a, 3 * a + phi, 3 * b, 3 * b + phi,
                  3 * a + 3 * b, 3 * a + 3 * b + phi]
        return ctx.rF(top, bottom)[ctx.times(ctx.square(point), -27, 64)]


# ----------------------------------------------------------------------
# two-variable formulas
# ----------------------------------------------------------------------

class AppellProduct(Identity):
    identity_id = IdentityId.APPELL_PRODUCT
    formula = ("₂F₁(α,β;γ;x/(x−1)) ₂F₁(α,β;γ';y/(y−1)) − δ(1−xy) C β̄γ(y) α(1−x) β(1−y) "
               "= F4(α,β;γ,γ';−x/((1−x)(1−y)),−y/((1−x)(1−y))),  γ' = αβγ̄")
    arity = 3
    domain = PointDomain.PLANE

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b, c = params
        return ctx.pairing([a, b], [0, c]) == 0

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b, c = params
        c2 = a + b - c
        x, y = point
        f = ctx.field
        left = ctx.rF([a, b], [c])[f.div(x, f.sub(x, 1))]
        right = ctx.rF([a, b], [c2])[f.div(y, f.sub(y, 1))]
        value = left * right
        if f.mul(x, y) == 1:
            const = ctx.gauss_quotient([c, c2], [a, b]) * ctx.char(b - c).sign()
            value = value - (const * ctx.chi(c - b, y)
                             * ctx.chi(a, ctx.one_minus(x)) * ctx.chi(b, ctx.one_minus(y)))
        return value

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b, c = params
        f = ctx.field
        x, y = point
        scale = f.inv(f.mul(ctx.one_minus(x), ctx.one_minus(y)))
        table = appell_f4_table(ctx.char(a), ctx.char(b), ctx.char(c),
                                ctx.char(a + b - c), ctx.psi)
        return table[f.neg(f.mul(x, scale))][f.neg(f.mul(y, scale))]


class BaileyProduct(Identity):
    identity_id = IdentityId.BAILEY_PRODUCT
    formula = ("₂F₁(α²,β²;γ;λ) ₂F₁(α²,β²;γ';λ) − δ(1−2λ) g°(γ)g°(γ')/(g(α²)g(β²)) αβ(4) "
               "= ₄F₃(α²,β²,αβ,αβφ;α²β²,γ,γ';4λ(1−λ)) + δ(1−λ),  γ' = α²β²γ̄")
    arity = 3
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b, c = params
        return (ctx.pairing([2 * a, 2 * b], [0, c]) == 0
                and ctx.pairing([2 * a + 2 * b], [0, 2 * c]) == 0)

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b, c = params
        c2 = 2 * a + 2 * b - c
        value = ctx.rF([2 * a, 2 * b], [c])[point] * ctx.rF([2 * a, 2 * b], [c2])[point]
        if ctx.one_minus(ctx.times(point, 2)) == 0:
            const = ctx.gauss_quotient([c, c2], [2 * a, 2 * b])
            value = value - const * ctx.chi(a + b, ctx.field.from_int(4))
        return value

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b, c = params
        c2 = 2 * a + 2 * b - c
        phi = ctx.phi
        arg = ctx.times(ctx.field.mul(point, ctx.one_minus(point)), 4)
        value = ctx.rF([2 * a, 2 * b, a + b, a + b + phi], [2 * a + 2 * b, c, c2])[arg]
        return value + delta_at(ctx.one_minus(point))


class AppellDiagonal(Identity):
    identity_id = IdentityId.APPELL_DIAGONAL
    formula = "F4(α²,β²;γ,γ';x,x) = ₄F₃(α²,β²,αβ,αβφ;α²β²,γ,γ';4x),  γγ' = α²β²"
    arity = 3
    requires_odd = True

    @classmethod
    def hypothesis(cls, ctx, params):
        a, b, c = params
        c2 = 2 * a + 2 * b - c
        return (ctx.pairing([c + c2], [0]) == 0
                and ctx.pairing([c], [c2]) == 0)

    @classmethod
    def lhs(cls, ctx, params, point):
        a, b, c = params
        return appell_f4(ctx.char(2 * a), ctx.char(2 * b), ctx.char(c),
                         ctx.char(2 * a + 2 * b - c), point, point, ctx.psi)

    @classmethod
    def rhs(cls, ctx, params, point):
        a, b, c = params
        phi = ctx.phi
        return ctx.rF([2 * a, 2 * b, a + b, a + b + phi],
                      [2 * a + 2 * b, c, 2 * a + 2 * b - c])[ctx.times(point, 4)]


CATALOG: Dict[IdentityId, Type[Identity]] = {
    entry.identity_id: entry for entry in (
        PochhammerProduct, GaussReflection, PochhammerReflection, DavenportHasse,
        PochhammerMultiplication, JacobiGauss, JacobiPochhammer,
        ExponentialValue, BinomialValue, Shift, Exchange, Cancellation,
        EulerGaussSum, KummerSum, DixonSum, Pfaff,
        KummerExponential, QuadraticArgument, EulerTransformation, RamanujanProduct,
        BesselProduct, BesselProductTwisted, BesselReflection, BesselConjugateReflection,
        TwoFZeroProduct, TwoFZeroConjugateProduct, ConfluentConjugateProduct,
        ConfluentSquareProduct, ConfluentSquareProductTwisted, CubicProduct,
        AppellProduct, BaileyProduct, AppellDiagonal,
    )
}


# Short catalog names accepted wherever an id is.
ALIASES: Dict[str, IdentityId] = {
    "g1": IdentityId.POCHHAMMER_PRODUCT,
    "g2": IdentityId.GAUSS_REFLECTION,
    "g3": IdentityId.POCHHAMMER_REFLECTION,
    "g4": IdentityId.DAVENPORT_HASSE,
    "g5": IdentityId.POCHHAMMER_MULTIPLICATION,
    "g6": IdentityId.EXPONENTIAL_VALUE,
    "g7": IdentityId.BINOMIAL_VALUE,
    "g8": IdentityId.SHIFT,
    "g9": IdentityId.EXCHANGE,
    "g10": IdentityId.CANCELLATION,
    "g11": IdentityId.EULER_GAUSS_SUM,
    "g12": IdentityId.KUMMER_SUM,
    "g13": IdentityId.DIXON_SUM,
    "j1": IdentityId.JACOBI_GAUSS,
    "j2": IdentityId.JACOBI_POCHHAMMER,
    "PFAFF": IdentityId.PFAFF,
    "P1-KUMMER-EXP": IdentityId.KUMMER_EXPONENTIAL,
    "P2-SQUARE": IdentityId.QUADRATIC_ARGUMENT,
    "P6-EULER": IdentityId.EULER_TRANSFORMATION,
    "P9-RAMANUJAN": IdentityId.RAMANUJAN_PRODUCT,
    "THM-B3a": IdentityId.BESSEL_PRODUCT,
    "THM-B3b": IdentityId.BESSEL_PRODUCT_TWISTED,
    "THM-B4": IdentityId.BESSEL_REFLECTION,
    "COR-B5": IdentityId.BESSEL_CONJUGATE_REFLECTION,
    "COR-B7": IdentityId.TWO_F_ZERO_PRODUCT,
    "COR-B8": IdentityId.TWO_F_ZERO_CONJUGATE_PRODUCT,
    "COR-B10": IdentityId.CONFLUENT_CONJUGATE_PRODUCT,
    "COR-B11a": IdentityId.CONFLUENT_SQUARE_PRODUCT,
    "COR-B11b": IdentityId.CONFLUENT_SQUARE_PRODUCT_TWISTED,
    "THM-B12": IdentityId.CUBIC_PRODUCT,
    "THM-F4-PRODUCT": IdentityId.APPELL_PRODUCT,
    "COR-B14": IdentityId.BAILEY_PRODUCT,
    "LEM-F4-DIAG": IdentityId.APPELL_DIAGONAL,
}


def get_identity(identity_id: str) -> Type[Identity]:
    """Catalog entry by kebab-case id or short catalog name."""
    if identity_id in ALIASES:
        return CATALOG[ALIASES[identity_id]]
    try:
        return CATALOG[IdentityId(identity_id)]
    except ValueError as e:
        raise UnknownIdentityError(f"Unknown identity '{identity_id}'.") from e
