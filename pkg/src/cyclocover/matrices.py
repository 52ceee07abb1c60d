"""Dense matrices: integer matrices and matrices over Laurent rings."""

from fractions import Fraction

from .rings import LaurentPoly, MixedRingError, Poly, ZZ


# ---------------------------------------------------------------------------
# generic list-of-lists helpers (entries support +, -, *)

def mat_identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]

def mat_copy(a):
    return [row[:] for row in a]

def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_neg(a):
    return [[-x for x in row] for row in a]

def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix shape mismatch in multiplication")
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        orow = []
        for j in range(n):
            acc = None
            for k, x in enumerate(row):
                term = x * b[k][j]
                acc = term if acc is None else acc + term
            orow.append(acc)
        out.append(orow)
    return out

def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(ra == rb for ra, rb in zip(a, b))

def mat_transpose(a):
    return [list(col) for col in zip(*a)]


# ---------------------------------------------------------------------------
# integer matrices

def int_mat_check(a, square=False):
    if not all(isinstance(x, int) for row in a for x in row):
        raise TypeError("expected an integer matrix")
    widths = {len(row) for row in a}
    if len(widths) > 1:
        raise ValueError("ragged matrix")
    if square and a and len(a) != len(a[0]):
        raise ValueError("expected a square matrix")

def det_int(a):
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    int_mat_check(a, square=True)
    n = len(a)
    if n == 0:
        return 1
    m = mat_copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]

def mat_is_identity(a):
    return all(x == (1 if i == j else 0)
               for i, row in enumerate(a) for j, x in enumerate(row))

def int_mat_inverse(a):
    """Inverse of a unimodular integer matrix."""
    n = len(a)
    d = det_int(a)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    # Gauss-Jordan over QQ; entries of the inverse are integers since |det|=1
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        piv = next(i for i in range(col, n) if work[i][col])
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    out = [[int(work[i][n + j]) for j in range(n)] for i in range(n)]
    return out

def int_mat_pow(a, e):
    """a**e for integer e (negative exponents need a unimodular)."""
    n = len(a)
    if e < 0:
        a = int_mat_inverse(a)
        e = -e
    result = mat_identity(n)
    base = mat_copy(a)
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# determinants over polynomial rings

def det_poly(rows, ring):
    """Exact determinant of a square matrix of Poly over an integral domain."""
    n = len(rows)
    if n == 0:
        return Poly.one(ring)
    m = [[e if isinstance(e, Poly) else Poly(ring, (e,)) for e in row]
         for row in rows]
    sign = 1
    prev = Poly.one(ring)
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero(ring)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = Poly.zero(ring)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


# ---------------------------------------------------------------------------
# Laurent matrices

class LaurentMatrix:
    """Rectangular matrix with LaurentPoly entries over one coefficient ring."""

    __slots__ = ("ring", "nrows", "ncols", "entries")

    def __init__(self, ring, nrows, ncols, entries):
        if len(entries) != nrows or any(len(r) != ncols for r in entries):
            raise ValueError("entry grid does not match declared shape")
        rows = []
        for row in entries:
            out = []
            for e in row:
                e = self._coerce_entry(ring, e)
                out.append(e)
            rows.append(tuple(out))
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.entries = tuple(rows)

    @staticmethod
    def _coerce_entry(ring, e):
        if isinstance(e, LaurentPoly):
            if e.ring is not ring:
                raise MixedRingError("matrix entry over a different ring")
            return e
        if isinstance(e, Poly):
            return LaurentPoly.from_poly(e.to_ring(ring))
        return LaurentPoly.const(ring, e)

    @classmethod
    def zero(cls, ring, nrows, ncols):
        z = LaurentPoly.zero(ring)
        return cls(ring, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, ring, n):
        z = LaurentPoly.zero(ring)
        o = LaurentPoly.one(ring)
        return cls(ring, n, n,
                   [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_int_rows(cls, ring, rows, ncols=None):
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(ring, nrows, ncols, rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return list(self.entries[i])

    def __mul__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        if self.ring is not other.ring:
            raise MixedRingError("matrix product over mixed rings")
        if self.ncols != other.nrows:
            raise ValueError("matrix shape mismatch in multiplication")
        z = LaurentPoly.zero(self.ring)
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not (a.is_zero or b.is_zero):
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return LaurentMatrix(self.ring, self.nrows, other.ncols, rows)

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("matrix shape mismatch in addition")
        return LaurentMatrix(self.ring, self.nrows, self.ncols,
                             [[a + b for a, b in zip(ra, rb)]
                              for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return LaurentMatrix(self.ring, self.nrows, self.ncols,
                             [[-a for a in row] for row in self.entries])

    def is_zero(self):
        return all(e.is_zero for row in self.entries for e in row)

    def to_ring(self, ring):
        if ring is self.ring:
            return self
        return LaurentMatrix(ring, self.nrows, self.ncols,
                             [[e.to_ring(ring) for e in row]
                              for row in self.entries])

    def cleared_rows(self):
        """Multiply each row by the power of t clearing it into Poly entries.

        Returns (poly_rows, shifts) where row i was multiplied by
        t**(-shifts[i]).  Unit row scalings do not change kernels or
        cokernel isomorphism type.
        """
        poly_rows = []
        shifts = []
        for row in self.entries:
            vals = [e.min_exp for e in row if not e.is_zero]
            v = min(vals) if vals else 0
            prow = []
            for e in row:
                if e.is_zero:
                    prow.append(Poly.zero(self.ring))
                else:
                    prow.append(e.body.shift(e.min_exp - v))
            poly_rows.append(prow)
            shifts.append(v)
        return poly_rows, shifts

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (self.ring is other.ring and self.nrows == other.nrows
                and self.ncols == other.ncols and self.entries == other.entries)

    def __repr__(self):
        body = "; ".join(", ".join(repr(e) for e in row) for row in self.entries)
        return f"LaurentMatrix({self.nrows}x{self.ncols} over {self.ring}: {body})"


def laurent_minor_gcd(mat: LaurentMatrix, size: int) -> Poly:
    """gcd (over ZZ[t], content included) of all size x size minors.

    Rows are first cleared by powers of t, which only changes minors by
    units.  Returns the zero polynomial when all minors vanish.
    """
    if mat.ring is not ZZ:
        raise TypeError("minor gcd is computed over ZZ")
    if size > mat.nrows or size > mat.ncols:
        return Poly.zero(ZZ)
    poly_rows, _ = mat.cleared_rows()
    from itertools import combinations
    from .rings import gcd_zz, _pos
    g = Poly.zero(ZZ)
    for rsel in combinations(range(mat.nrows), size):
        for csel in combinations(range(mat.ncols), size):
            sub = [[poly_rows[i][j] for j in csel] for i in rsel]
            d = det_poly(sub, ZZ)
            if d.is_zero:
                continue
            # strip the t-power unit so contents combine correctly
            k = d.low_order()
            if k:
                d = Poly(ZZ, d.coeffs[k:])
            g = gcd_zz(g, d)
            if g.degree == 0 and abs(g.coeffs[0]) == 1:
                return _pos(g)
    return _pos(g)
