"""Finitely presented modules over ZZ[t, 1/t] and the finite-generation test.

A module is the cokernel of a Laurent matrix over ZZ (rows = generators,
columns = relations).  Finite generation over ZZ is decided by checking
finite dimensionality and eigenvalue integrality of the t-action after
base change to QQ and to the finitely many relevant prime fields.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import factorize
from .matrices import LaurentMatrix, laurent_minor_gcd
from .normal_forms import laurent_cokernel
from .rings import GF, LaurentPoly, Poly, QQ, ZZ


class FreeCokernelError(ValueError):
    """The QQ-cokernel has positive free rank, so no finite prime set applies."""


INFINITE_DIMENSION = "infinite dimension"
T_NOT_INTEGRAL = "non-integral eigenvalue of t"
TINV_NOT_INTEGRAL = "non-integral eigenvalue of t^-1"


class ModulePresentation:
    """coker of `relations`: generators g, relation matrix g x r over ZZ."""

    __slots__ = ("generators", "relations")

    def __init__(self, generators: int, relations: LaurentMatrix):
        if relations.ring is not ZZ:
            raise TypeError("relation matrix must be over ZZ")
        if relations.nrows != generators:
            raise ValueError("relation matrix must have one row per generator")
        self.generators = generators
        self.relations = relations

    @classmethod
    def principal(cls, f):
        """coker(f) on one generator; f a LaurentPoly or Poly over ZZ."""
        if isinstance(f, Poly):
            f = LaurentPoly.from_poly(f)
        return cls(1, LaurentMatrix(ZZ, 1, 1, [[f]]))

    @classmethod
    def free(cls, rank):
        return cls(rank, LaurentMatrix.zero(ZZ, rank, 0))

    def __repr__(self):
        return (f"ModulePresentation({self.generators} generators, "
                f"{self.relations.ncols} relations)")


@dataclass
class Property1Result:
    finite_dim: bool
    t_integral: bool
    tinv_integral: bool
    dim: Optional[int]

    def holds(self):
        return self.finite_dim and self.t_integral and self.tinv_integral


@dataclass
class FinGenWitness:
    prime: int              # 0 for the generic point (kappa = QQ)
    kind: str
    factor: Optional[Poly]  # offending invariant factor, when applicable


@dataclass
class FinGenVerdict:
    answer: bool
    witness: Optional[FinGenWitness]
    underlying_rank: Optional[int]
    relevant_primes: tuple


def _residue_field(P):
    if P == 0:
        return QQ
    return GF(P)


def minor_gcd(M: ModulePresentation) -> Poly:
    """gcd over ZZ[t] (content included) of the maximal g x g minors."""
    return laurent_minor_gcd(M.relations, M.generators)


def order_ideal(M: ModulePresentation) -> Poly:
    """Canonical generator of the order ideal of the QQ[t,1/t]-torsion part.

    Zero when the QQ-cokernel has positive free rank.  The canonical
    associate is primitive with positive leading and nonzero constant term;
    the integer content of the minor gcd is deliberately not part of it
    (it is recovered by relevant_primes).
    """
    g = minor_gcd(M)
    if g.is_zero:
        return g
    return g.primitive()


def base_change_residue(M: ModulePresentation, P):
    """Invariant factors and free rank of kappa(P) tensor M over kappa[t,1/t]."""
    field = _residue_field(P)
    return laurent_cokernel(M.relations.to_ring(field))


def property1_check(M: ModulePresentation, P) -> Property1Result:
    """Finite dimensionality plus integrality of the t and 1/t eigenvalues."""
    factors, free_rank = base_change_residue(M, P)
    if free_rank > 0:
        return Property1Result(False, False, False, None)
    dim = sum(f.degree for f in factors)
    if P != 0:
        # every element algebraic over F_p is integral over F_p
        return Property1Result(True, True, True, dim)
    t_ok = all(c.denominator == 1 for f in factors for c in f.coeffs)
    const = Fraction(1)
    for f in factors:
        const *= f.constant
    tinv_ok = t_ok and const in (1, -1)
    return Property1Result(True, t_ok, tinv_ok, dim)


def relevant_primes(M: ModulePresentation):
    """Finite prime set outside of which the residue dimension is stable.

    Primes dividing the content of the maximal-minor gcd (where the
    residue rank drops) or the leading/trailing coefficients of the
    canonical order ideal (where the residue dimension jumps).
    """
    g = minor_gcd(M)
    if g.is_zero:
        raise FreeCokernelError("QQ-cokernel has positive free rank")
    prim = g.primitive()
    bad = abs(g.content())
    if not prim.is_zero:
        bad *= abs(prim.leading) * abs(prim.constant)
    if bad <= 1:
        return []
    return sorted(factorize(bad))


def _first_nonintegral(factors):
    for f in factors:
        if any(c.denominator != 1 for c in f.coeffs):
            return f
    return None


def _first_nonunit_constant(factors):
    for f in factors:
        if f.constant not in (1, -1):
            return f
    return None


def finitely_generated_over_Z(M: ModulePresentation) -> FinGenVerdict:
    """Decide whether coker(relations) is finitely generated over ZZ.

    Checks the finite-dimension/integral-eigenvalue property at the
    generic point and at every relevant prime.
    """
    factors, free_rank = base_change_residue(M, 0)
    if free_rank > 0:
        return FinGenVerdict(False,
                             FinGenWitness(0, INFINITE_DIMENSION, None),
                             None, ())
    t_ok = all(c.denominator == 1 for f in factors for c in f.coeffs)
    if not t_ok:
        return FinGenVerdict(False,
                             FinGenWitness(0, T_NOT_INTEGRAL,
                                           _first_nonintegral(factors)),
                             None, ())
    bad = _first_nonunit_constant(factors)
    if bad is not None:
        return FinGenVerdict(False,
                             FinGenWitness(0, TINV_NOT_INTEGRAL, bad),
                             None, ())
    primes = tuple(relevant_primes(M))
    for p in primes:
        pf, p_free = base_change_residue(M, p)
        if p_free > 0:
            return FinGenVerdict(False,
                                 FinGenWitness(p, INFINITE_DIMENSION, None),
                                 None, primes)
    rank = None
    delta = order_ideal(M)
    if (M.relations.ncols == M.generators and not delta.is_zero
            and delta.is_monic() and delta.constant in (1, -1)):
        rank = delta.degree
    return FinGenVerdict(True, None, rank, primes)
