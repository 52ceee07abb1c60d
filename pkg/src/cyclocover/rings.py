"""Exact coefficient rings and dense uni-variate (Laurent) polynomials.

Supported coefficient rings: the integers (ZZ), the rationals (QQ) and
prime fields GF(p) for word-sized p.  Polynomials are dense lists of
coefficients; Laurent polynomials carry an extra power-of-t valuation.
"""

from fractions import Fraction
from math import gcd

from .arith import is_prime


class ExactDivisionError(ArithmeticError):
    """Raised when a division required to be exact leaves a remainder."""


class MixedRingError(ValueError):
    """Raised when operands live over different coefficient rings."""


class _IntegerRing:
    name = "ZZ"
    is_field = False
    char = 0

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not an integer coefficient")
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise TypeError(f"cannot coerce {x!r} into ZZ")

    def is_unit(self, x):
        return x == 1 or x == -1

    def inv(self, x):
        if not self.is_unit(x):
            raise ExactDivisionError(f"{x} is not a unit of ZZ")
        return x

    def __repr__(self):
        return "ZZ"


class _RationalField:
    name = "QQ"
    is_field = True
    char = 0

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not a rational coefficient")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def is_unit(self, x):
        return x != 0

    def inv(self, x):
        return 1 / Fraction(x)

    def __repr__(self):
        return "QQ"


ZZ = _IntegerRing()
QQ = _RationalField()


class FpElt:
    """Element of a prime field, reduced to its least nonnegative residue."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _val(self, other):
        if isinstance(other, FpElt):
            if other.p != self.p:
                raise MixedRingError("elements of different prime fields")
            return other.v
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._val(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElt(self.p, self.v + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._val(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElt(self.p, self.v - v)

    def __rsub__(self, other):
        v = self._val(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElt(self.p, v - self.v)

    def __mul__(self, other):
        v = self._val(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElt(self.p, self.v * v)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElt(self.p, -self.v)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return FpElt(self.p, pow(self.v, self.p - 2, self.p))

    def __truediv__(self, other):
        v = self._val(other)
        if v is NotImplemented:
            return NotImplemented
        return self * FpElt(self.p, v).inverse()

    def __eq__(self, other):
        v = self._val(other)
        if v is NotImplemented:
            return NotImplemented
        return self.v == v

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}"


class PrimeField:
    name_prefix = "GF"
    is_field = True

    _cache: dict = {}

    def __new__(cls, p):
        if p in cls._cache:
            return cls._cache[p]
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 1 << 64:
            raise ValueError("prime fields are limited to word-sized p")
        self = super().__new__(cls)
        self.p = p
        self.char = p
        self.name = f"GF({p})"
        cls._cache[p] = self
        return self

    def coerce(self, x):
        if isinstance(x, FpElt):
            if x.p != self.p:
                raise MixedRingError("element of a different prime field")
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a field coefficient")
        if isinstance(x, int):
            return FpElt(self.p, x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return FpElt(self.p, x.numerator) / FpElt(self.p, x.denominator)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def is_unit(self, x):
        return bool(self.coerce(x))

    def inv(self, x):
        return self.coerce(x).inverse()

    def __repr__(self):
        return self.name


def GF(p):
    return PrimeField(p)


def _same_ring(a, b):
    if a.ring is not b.ring:
        raise MixedRingError(f"mixed coefficient rings {a.ring} and {b.ring}")
    return a.ring


class Poly:
    """Dense polynomial; coeffs[i] is the coefficient of t**i."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    @classmethod
    def one(cls, ring):
        return cls(ring, (1,))

    @classmethod
    def t(cls, ring):
        return cls(ring, (0, 1))

    @classmethod
    def monomial(cls, ring, k, c=1):
        return cls(ring, (0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self):
        return self.coeffs[0] if self.coeffs else self.ring.coerce(0)

    def __add__(self, other):
        ring = _same_ring(self, other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return Poly(ring, cs)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        ring = _same_ring(self, other)
        if self.is_zero or other.is_zero:
            return Poly.zero(ring)
        out = [ring.coerce(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(ring, out)

    def scale(self, c):
        c = self.ring.coerce(c)
        return Poly(self.ring, [a * c for a in self.coeffs])

    def shift(self, k):
        """Multiply by t**k (k >= 0)."""
        if self.is_zero:
            return self
        return Poly(self.ring, (0,) * k + self.coeffs)

    def __pow__(self, n):
        result = Poly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Long division; requires every coefficient quotient to be exact."""
        ring = _same_ring(self, other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading
        if ring.is_field:
            lead_inv = ring.inv(lead)
        q = [ring.coerce(0)] * max(len(rem) - d, 0)
        while len(rem) - 1 >= d and rem:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < d:
                break
            top = rem[-1]
            if ring.is_field:
                c = top * lead_inv
            else:
                cq, cr = divmod(top, lead)
                if cr:
                    raise ExactDivisionError(
                        f"leading coefficient {top} not divisible by {lead}")
                c = cq
            k = len(rem) - 1 - d
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
        return Poly(ring, q), Poly(ring, rem)

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ExactDivisionError("division not exact")
        return q

    def divides(self, other):
        """True if self divides other (field coefficients)."""
        if self.is_zero:
            return other.is_zero
        return divmod(other, self)[1].is_zero

    def monic(self):
        if self.is_zero:
            return self
        if not self.ring.is_field:
            if self.ring.is_unit(self.leading):
                return self.scale(self.ring.inv(self.leading))
            raise ExactDivisionError("cannot make monic over a non-field")
        return self.scale(self.ring.inv(self.leading))

    def is_monic(self):
        return not self.is_zero and self.leading == 1

    def evaluate(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.ring.coerce(0)
        return acc

    def content(self):
        """gcd of integer coefficients (ZZ polynomials only), >= 0."""
        if self.ring is not ZZ:
            raise TypeError("content is defined over ZZ")
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self):
        """Content-1, positive-leading associate over ZZ."""
        if self.is_zero:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return Poly(ZZ, [a // c for a in self.coeffs])

    def to_ring(self, ring):
        if ring is self.ring:
            return self
        if ring is ZZ:
            return Poly(ZZ, [ZZ.coerce(c) for c in self.coeffs])
        return Poly(ring, self.coeffs)

    def low_order(self):
        """Multiplicity of the root t = 0."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over a field."""
    ring = _same_ring(a, b)
    if not ring.is_field:
        raise TypeError("poly_gcd needs field coefficients")
    while not b.is_zero:
        a, b = b, divmod(a, b)[1]
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Extended gcd over a field: returns (g, x, y) with x*a + y*b = g monic."""
    ring = _same_ring(a, b)
    if not ring.is_field:
        raise TypeError("poly_xgcd needs field coefficients")
    x0, x1 = Poly.one(ring), Poly.zero(ring)
    y0, y1 = Poly.zero(ring), Poly.one(ring)
    while not b.is_zero:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a.is_zero:
        return a, x0, y0
    u = ring.inv(a.leading)
    return a.scale(u), x0.scale(u), y0.scale(u)


def gcd_zz(a: Poly, b: Poly) -> Poly:
    """gcd over ZZ[t] via Gauss: gcd of contents times primitive gcd."""
    if a.ring is not ZZ or b.ring is not ZZ:
        raise TypeError("gcd_zz needs ZZ coefficients")
    if a.is_zero:
        return _pos(b)
    if b.is_zero:
        return _pos(a)
    c = gcd(a.content(), b.content())
    g = poly_gcd(a.to_ring(QQ), b.to_ring(QQ))
    # clear denominators to a primitive integer polynomial
    den = 1
    for q in g.coeffs:
        den = den * q.denominator // gcd(den, q.denominator)
    gz = Poly(ZZ, [int(q * den) for q in g.coeffs]).primitive()
    return gz.scale(c)


def _pos(a: Poly) -> Poly:
    if a.is_zero or a.leading > 0:
        return a
    return -a


def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial over ZZ."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("cyclotomic index must be a positive integer")
    cache = cyclotomic._cache
    if n in cache:
        return cache[n]
    num = Poly(ZZ, [-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = num.exact_div(cyclotomic(d))
    cache[n] = num
    return num


cyclotomic._cache = {}


class LaurentPoly:
    """Element t**val * body(t) with body(0) != 0 (zero has val 0)."""

    __slots__ = ("ring", "val", "body")

    def __init__(self, ring, val, body):
        if not isinstance(body, Poly):
            body = Poly(ring, body)
        elif body.ring is not ring:
            body = body.to_ring(ring)
        if body.is_zero:
            val = 0
        else:
            k = body.low_order()
            if k:
                body = Poly(ring, body.coeffs[k:])
                val += k
        self.ring = ring
        self.val = val
        self.body = body

    @classmethod
    def zero(cls, ring):
        return cls(ring, 0, Poly.zero(ring))

    @classmethod
    def one(cls, ring):
        return cls(ring, 0, Poly.one(ring))

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p.ring, 0, p)

    @classmethod
    def t_power(cls, ring, k, c=1):
        return cls(ring, k, Poly(ring, (c,)))

    @classmethod
    def const(cls, ring, c):
        return cls(ring, 0, Poly(ring, (c,)))

    @property
    def is_zero(self):
        return self.body.is_zero

    @property
    def min_exp(self):
        return self.val

    @property
    def max_exp(self):
        return self.val + self.body.degree

    def coefficient(self, k):
        i = k - self.val
        if 0 <= i <= self.body.degree:
            return self.body.coeffs[i]
        return self.ring.coerce(0)

    def __add__(self, other):
        ring = _same_ring(self, other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        v = min(self.val, other.val)
        a = self.body.shift(self.val - v)
        b = other.body.shift(other.val - v)
        return LaurentPoly(ring, v, a + b)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly(self.ring, self.val, -self.body)

    def __mul__(self, other):
        ring = _same_ring(self, other)
        return LaurentPoly(ring, self.val + other.val, self.body * other.body)

    def shift(self, k):
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return LaurentPoly(self.ring, self.val + k, self.body)

    def is_unit(self):
        return self.body.degree == 0 and self.ring.is_unit(self.body.coeffs[0])

    def to_ring(self, ring):
        if ring is self.ring:
            return self
        return LaurentPoly(ring, self.val, self.body.to_ring(ring))

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.ring is other.ring and self.val == other.val
                and self.body == other.body)

    def __hash__(self):
        return hash((id(self.ring), self.val, self.body))

    def __repr__(self):
        if self.is_zero:
            return "0"
        if self.val == 0:
            return repr(self.body)
        return f"t^{self.val}*({self.body!r})"


def laurent_normalize(f: LaurentPoly):
    """Split f as cofactor * primitive.

    The primitive part is a Poly with nonzero constant term and positive
    leading coefficient; over ZZ it has content 1, over a field it is monic.
    The cofactor (sign/content/leading data times a power of t) is returned
    as a LaurentPoly, so cofactor * primitive == f exactly.
    """
    ring = f.ring
    if f.is_zero:
        return LaurentPoly.one(ring), Poly.zero(ring)
    body = f.body
    if ring is ZZ:
        prim = body.primitive()
        c = body.coeffs[-1] // prim.coeffs[-1]  # signed content
        return LaurentPoly.t_power(ring, f.val, c), prim
    if ring.is_field:
        prim = body.monic()
        return LaurentPoly.t_power(ring, f.val, body.leading), prim
    raise TypeError(f"unsupported coefficient ring {ring}")


def canonical_associate(f: LaurentPoly) -> Poly:
    """The canonical polynomial associate of f under the units of the ring."""
    return laurent_normalize(f)[1]
