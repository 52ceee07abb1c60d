"""Shared test helpers: independent oracles and random generators.

The oracles here deliberately avoid the library's own decision paths:
the lattice oracle uses rational companion matrices plus integer HNF,
matrix orders are found by brute-force powering.
"""

from fractions import Fraction
from math import gcd, lcm

from cyclocover.matrices import LaurentMatrix, mat_identity, mat_mul
from cyclocover.rings import LaurentPoly, Poly, ZZ


# ---------------------------------------------------------------------------
# integer HNF (row style), used to canonicalize lattices

def hnf(rows):
    """Canonical row Hermite form of an integer matrix, as a tuple of rows."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return ()
    ncols = len(work[0])
    out = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        # clear below by Euclid
        for i in range(r + 1, len(work)):
            while work[i][c]:
                q = work[i][c] // work[r][c]
                work[i] = [a - q * b for a, b in zip(work[i], work[r])]
                if work[i][c]:
                    work[r], work[i] = work[i], work[r]
        if work[r][c] < 0:
            work[r] = [-a for a in work[r]]
        for i in range(r):
            q = work[i][c] // work[r][c]
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r] if any(row))


# ---------------------------------------------------------------------------
# lattice-stabilization oracle for principal modules coker(f)

def _companion_frac(g):
    d = g.degree
    lead = Fraction(g.leading)
    m = [[Fraction(0)] * d for _ in range(d)]
    for i in range(1, d):
        m[i][i - 1] = Fraction(1)
    for i in range(d):
        m[i][d - 1] = -Fraction(g.coeffs[i]) / lead
    return m

def _frac_inv(m):
    n = len(m)
    work = [row[:] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if work[i][col])
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [[work[i][n + j] for j in range(n)] for i in range(n)]

def _lattice_key(vectors, den):
    return hnf([[int(x * den) for x in v] for v in vectors])

def lattice_fg_oracle(f: Poly, max_n=12) -> bool:
    """Brute-force test: is coker(f) over ZZ[t,1/t] finitely generated over ZZ?

    Nonzero content > 1 surjects onto F_p[t,1/t], so only primitive f can
    give a finitely generated module; for those, track the abelian group
    generated by t^j * e (|j| <= N) inside the companion model and check
    the one-step stabilization L_N == L_{N+1}.
    """
    if f.is_zero:
        return False
    if abs(f.content()) > 1:
        return False
    g = f.primitive()
    k = g.low_order()
    if k:  # t is a unit of ZZ[t,1/t], so a t-power factor is irrelevant
        g = Poly(ZZ, g.coeffs[k:])
    if g.degree == 0:
        return True  # unit relation, zero module
    c = _companion_frac(g)
    cinv = _frac_inv(c)
    d = g.degree
    e = [Fraction(int(i == 0)) for i in range(d)]

    def gens(n):
        vs = [e]
        fwd = back = e
        for _ in range(n):
            fwd = [sum(c[i][k] * fwd[k] for k in range(d)) for i in range(d)]
            back = [sum(cinv[i][k] * back[k] for k in range(d)) for i in range(d)]
            vs.append(fwd)
            vs.append(back)
        return vs

    for n in range(1, max_n + 1):
        a = gens(n)
        b = gens(n + 1)
        den = 1
        for v in b:
            for x in v:
                den = lcm(den, x.denominator)
        if _lattice_key(a, den) == _lattice_key(b, den):
            return True
    return False


# ---------------------------------------------------------------------------
# brute-force matrix order

def brute_order(a, cap=2000):
    n = len(a)
    acc = mat_identity(n)
    for m in range(1, cap + 1):
        acc = mat_mul(acc, a)
        if acc == mat_identity(n):
            return m
    return None

def brute_order_prime_to(a, k, cap=2000):
    n = len(a)
    acc = mat_identity(n)
    for m in range(1, cap + 1):
        acc = mat_mul(acc, a)
        if acc == mat_identity(n) and gcd(m, k) == 1:
            return m
    return None


# ---------------------------------------------------------------------------
# random generators

def rand_unimodular_int(n, rng, steps=6):
    m = mat_identity(n)
    if n < 2:
        return m
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m

def rand_unimodular_laurent(n, rng, steps=4):
    """Random unimodular Laurent matrix over ZZ with its exact inverse."""
    u = LaurentMatrix.identity(ZZ, n)
    uinv = LaurentMatrix.identity(ZZ, n)
    lams = [LaurentPoly.const(ZZ, 1), LaurentPoly.const(ZZ, -1),
            LaurentPoly.t_power(ZZ, 1), LaurentPoly.t_power(ZZ, -1),
            LaurentPoly.t_power(ZZ, 1, -1)]
    if n < 2:
        return u, uinv
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        lam = rng.choice(lams)
        e = _elementary(n, i, j, lam)
        einv = _elementary(n, i, j, -lam)
        u = e * u
        uinv = uinv * einv
    return u, uinv

def _elementary(n, i, j, lam):
    rows = [[LaurentPoly.const(ZZ, int(a == b)) for b in range(n)]
            for a in range(n)]
    rows[i][j] = lam
    return LaurentMatrix(ZZ, n, n, rows)


def random_chain_endo(rng, max_degrees=3, max_h=2, max_acyclic=1):
    """Random finite free ZZ-complex with a commuting endomorphism.

    Built as (zero-boundary summands with prescribed monodromy) plus
    (acyclic identity pairs), then conjugated degreewise by random
    unimodular integer matrices.  Returns (ranks, boundaries, f, hom)
    where hom[j] is the induced matrix on H_j(F; QQ) by construction.
    """
    ndeg = rng.randint(1, max_degrees)
    h = [rng.randint(0, max_h) for _ in range(ndeg)]
    if sum(h) == 0:
        h[rng.randrange(ndeg)] = 1
    a = [rng.randint(0, max_acyclic) for _ in range(ndeg - 1)]  # a[j]: degrees j+1, j
    hom = [[[rng.randint(-3, 3) for _ in range(h[j])] for _ in range(h[j])]
           for j in range(ndeg)]
    acyclic_f = [[[rng.randint(-2, 2) for _ in range(a[j])] for _ in range(a[j])]
                 for j in range(ndeg - 1)]
    # basis order in degree j: [H_j | upper end of pair a[j-1] | lower end of
    # pair a[j]]; pair a[j] spans degrees (j+1, j) with identity boundary
    def rank_parts(j):
        upper = a[j - 1] if j >= 1 else 0
        lower = a[j] if j < ndeg - 1 else 0
        return h[j], upper, lower
    ranks = [sum(rank_parts(j)) for j in range(ndeg)]
    boundaries = []
    for j in range(1, ndeg):
        rows = ranks[j - 1]
        cols = ranks[j]
        m = [[0] * cols for _ in range(rows)]
        hj, upper_j, _ = rank_parts(j)
        h_tgt, _, lower_tgt = rank_parts(j - 1)
        off_tgt = ranks[j - 1] - lower_tgt
        for i in range(upper_j):
            m[off_tgt + i][hj + i] = 1
        boundaries.append(m)
    f = []
    for j in range(ndeg):
        hj, upper_j, lower_j = rank_parts(j)
        n = ranks[j]
        m = [[0] * n for _ in range(n)]
        for x in range(hj):
            for y in range(hj):
                m[x][y] = hom[j][x][y]
        if upper_j:
            blk = acyclic_f[j - 1]
            for x in range(upper_j):
                for y in range(upper_j):
                    m[hj + x][hj + y] = blk[x][y]
        if lower_j:
            blk = acyclic_f[j]
            for x in range(lower_j):
                for y in range(lower_j):
                    m[hj + upper_j + x][hj + upper_j + y] = blk[x][y]
        f.append(m)
    # disguise with a degreewise unimodular change of basis
    from cyclocover.matrices import int_mat_inverse
    ps = [rand_unimodular_int(ranks[j], rng) for j in range(ndeg)]
    pinvs = [int_mat_inverse(p) for p in ps]
    boundaries = [mat_mul(mat_mul(ps[j - 1], b), pinvs[j])
                  for j, b in enumerate(boundaries, start=1)]
    f = [mat_mul(mat_mul(ps[j], fj), pinvs[j]) for j, fj in enumerate(f)]
    return ranks, boundaries, f, hom
