"""Matrix normal forms over Euclidean domains, plus derived invariants.

Smith normal form is supported over ZZ and over k[t] for k a field
(QQ or a prime field).  Laurent matrices over a field reduce to the
polynomial case by clearing rows with powers of t.
"""

from dataclasses import dataclass

from .arith import factorize
from .matrices import (LaurentMatrix, det_int, mat_copy, mat_identity,
                       int_mat_check, int_mat_pow, mat_is_identity)
from .rings import (MixedRingError, Poly, QQ, ZZ, cyclotomic)

from math import lcm


class DomainError(MixedRingError):
    """Matrix entries do not lie uniformly in a supported domain."""


# ---------------------------------------------------------------------------
# Euclidean domain adapters

class _IntDomain:
    name = "ZZ"
    zero = 0
    one = 1

    @staticmethod
    def is_zero(x):
        return x == 0

    @staticmethod
    def size(x):
        return abs(x)

    @staticmethod
    def divmod(a, b):
        return divmod(a, b)

    @staticmethod
    def unit_of(x):
        """Unit u with x == u * canonical(x)."""
        return -1 if x < 0 else 1

    @staticmethod
    def unit_inverse(u):
        return u

    @staticmethod
    def divides_exactly(a, b):
        return b % a == 0


class _PolyDomain:
    def __init__(self, field):
        self.field = field
        self.name = f"{field}[t]"
        self.zero = Poly.zero(field)
        self.one = Poly.one(field)

    @staticmethod
    def is_zero(x):
        return x.is_zero

    @staticmethod
    def size(x):
        return x.degree

    @staticmethod
    def divmod(a, b):
        return divmod(a, b)

    @staticmethod
    def unit_of(x):
        return Poly(x.ring, (x.leading,))

    def unit_inverse(self, u):
        return Poly(self.field, (self.field.inv(u.coeffs[0]),))

    @staticmethod
    def divides_exactly(a, b):
        return divmod(b, a)[1].is_zero


def _infer_domain(rows):
    kinds = set()
    ring = None
    for row in rows:
        for e in row:
            if isinstance(e, bool):
                raise DomainError("bool entry in matrix")
            if isinstance(e, int):
                kinds.add("int")
            elif isinstance(e, Poly):
                kinds.add("poly")
                if ring is None:
                    ring = e.ring
                elif ring is not e.ring:
                    raise DomainError("mixed polynomial coefficient rings")
            else:
                raise DomainError(f"unsupported matrix entry {e!r}")
    if kinds == {"int"} or not kinds:
        return _IntDomain()
    if kinds == {"poly"}:
        if ring is ZZ:
            raise DomainError("SNF over ZZ[t] is not supported (not a PID)")
        if not ring.is_field:
            raise DomainError(f"SNF needs field polynomial coefficients, got {ring}")
        return _PolyDomain(ring)
    raise DomainError("mixed integer and polynomial entries")


@dataclass
class SnfResult:
    """U * A * V == D with U, V invertible over the domain."""
    U: list
    D: list
    V: list
    Vinv: list
    rank: int

    @property
    def invariant_factors(self):
        out = []
        for i in range(self.rank):
            out.append(self.D[i][i])
        return out


def smith_normal_form(rows, domain=None) -> SnfResult:
    """Smith normal form over ZZ or k[t].

    `rows` is a list of rows; entries must be ints or Poly over one field.
    Pivots are chosen by minimal Euclidean size, ties by lowest (row, col).
    """
    dom = domain if domain is not None else _infer_domain(rows)
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    D = mat_copy(rows)
    U = mat_identity(m, dom.one, dom.zero)
    V = mat_identity(n, dom.one, dom.zero)
    Vinv = mat_identity(n, dom.one, dom.zero)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def row_op(i, j, c):
        # row_i -= c * row_j
        D[i] = [a - c * b for a, b in zip(D[i], D[j])]
        U[i] = [a - c * b for a, b in zip(U[i], U[j])]

    def col_op(j, i, c):
        # col_j -= c * col_i ;  Vinv row_i += c * row_j
        for row in D:
            row[j] = row[j] - c * row[i]
        for row in V:
            row[j] = row[j] - c * row[i]
        Vinv[i] = [a + c * b for a, b in zip(Vinv[i], Vinv[j])]

    def scale_row(i, u_inv):
        D[i] = [u_inv * a for a in D[i]]
        U[i] = [u_inv * a for a in U[i]]

    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                e = D[i][j]
                if dom.is_zero(e):
                    continue
                s = dom.size(e)
                if best is None or s < best:
                    best = s
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if dom.is_zero(D[i][t]):
                    continue
                q, r = dom.divmod(D[i][t], D[t][t])
                if not dom.is_zero(q):
                    row_op(i, t, q)
                if not dom.is_zero(D[i][t]):
                    swap_rows(t, i)
                    dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, n):
                if dom.is_zero(D[t][j]):
                    continue
                q, r = dom.divmod(D[t][j], D[t][t])
                if not dom.is_zero(q):
                    col_op(j, t, q)
                if not dom.is_zero(D[t][j]):
                    swap_cols(t, j)
                    dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if dom.is_zero(D[i][j]):
                        continue
                    if not dom.divides_exactly(D[t][t], D[i][j]):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # fold the offending row into row t and re-reduce
            D[t] = [a + b for a, b in zip(D[t], D[offender])]
            U[t] = [a + b for a, b in zip(U[t], U[offender])]
        u = dom.unit_of(D[t][t])
        if u != dom.one:
            scale_row(t, dom.unit_inverse(u))
        t += 1
    return SnfResult(U=U, D=D, V=V, Vinv=Vinv, rank=t)


# ---------------------------------------------------------------------------
# characteristic polynomial and finite order

def char_poly(a) -> Poly:
    """det(tI - A), monic, for a square integer matrix."""
    int_mat_check(a, square=True)
    n = len(a)
    ring = ZZ
    t = Poly.t(ring)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = Poly(ring, (-a[i][j],))
            if i == j:
                e = e + t
            row.append(e)
        rows.append(row)
    from .matrices import det_poly
    return det_poly(rows, ring)


def finite_order(a):
    """Exact multiplicative order of an invertible integer matrix.

    Returns None when the order is infinite.  Requires |det A| = 1.
    """
    int_mat_check(a, square=True)
    n = len(a)
    if n == 0:
        return 1
    if det_int(a) not in (1, -1):
        raise ValueError("matrix must have determinant +-1")
    cp = char_poly(a)
    # peel cyclotomic factors; anything left means an eigenvalue off the
    # unit circle or a non-root-of-unity on it, hence infinite order
    rem = cp.to_ring(QQ)
    indices = set()
    d = 1
    while rem.degree > 0 and d <= 2 * n * n + 2:
        phi = cyclotomic(d).to_ring(QQ)
        if phi.degree <= rem.degree:
            while True:
                q, r = divmod(rem, phi)
                if r.is_zero:
                    rem = q
                    indices.add(d)
                else:
                    break
        d += 1
    if rem.degree > 0:
        return None
    order = 1
    for d in indices:
        order = lcm(order, d)
    if not mat_is_identity(int_mat_pow(a, order)):
        return None  # eigenvalues are roots of unity but A is not semisimple
    for p in factorize(order):
        while order % p == 0 and mat_is_identity(int_mat_pow(a, order // p)):
            order //= p
    return order


# ---------------------------------------------------------------------------
# cokernels over Laurent PIDs

def laurent_cokernel(mat: LaurentMatrix):
    """Invariant factors and free rank of coker over kappa[t, 1/t].

    Rows are cleared into kappa[t] by unit row scalings, Smith normal form
    is taken there, and unit (power-of-t or constant) factors are dropped.
    Returned factors are monic with nonzero constant term, in divisibility
    order.
    """
    ring = mat.ring
    if not ring.is_field:
        raise DomainError("laurent_cokernel needs field coefficients")
    if mat.nrows == 0:
        return [], 0
    if mat.ncols == 0:
        return [], mat.nrows
    poly_rows, _ = mat.cleared_rows()
    snf = smith_normal_form(poly_rows, _PolyDomain(ring))
    factors = []
    for f in snf.invariant_factors:
        k = f.low_order()
        if k:
            f = Poly(ring, f.coeffs[k:])
        if f.degree > 0:
            factors.append(f.monic())
    return factors, mat.nrows - snf.rank
