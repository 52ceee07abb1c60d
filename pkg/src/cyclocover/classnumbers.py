"""The first factor h_p^- of the cyclotomic class number and the odd-factor gate.

h_p^- is computed twice, by the character-sum product over odd characters
mod p and by a Maillet-type determinant, and the two values are
cross-checked.  h_p^+ is not computable here; it is shipped as a fixture
table of published (heuristic) factorizations.
"""

import csv
import os
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional

from .arith import is_prime, primitive_root, smallest_odd_prime_factor
from .errors import InternalCheckError, PreconditionError
from .matrices import det_int
from .rings import Poly, ZZ, cyclotomic

DEFAULT_PRIME_BOUND = 211


def prime_bound():
    raw = os.environ.get("CCK_PRIME_BOUND")
    if raw is None:
        return DEFAULT_PRIME_BOUND
    try:
        b = int(raw)
    except ValueError:
        raise PreconditionError(f"CCK_PRIME_BOUND is not an integer: {raw!r}")
    if b < 3:
        raise PreconditionError(f"CCK_PRIME_BOUND must be >= 3, got {b}")
    return b


def _check_p(p, bound):
    if bound is None:
        bound = prime_bound()
    if not isinstance(p, int) or p < 3 or p % 2 == 0 or not is_prime(p):
        raise PreconditionError(f"p must be an odd prime, got {p}")
    if p > bound:
        raise PreconditionError(f"p={p} exceeds the configured bound {bound}")


def _cyclic_mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % n] += x * y
    return out


def _hp_minus_charsum(p):
    """h_p^- = (-1)^((p-1)/2) * prod_{a odd} f(zeta^a) / (2p)^((p-1)/2 - 1).

    Here zeta is a primitive (p-1)-th root of unity, f(T) = sum_j g_j T^j
    with g_j the least positive residue of g^j for a primitive root g, and
    f(zeta^a) = sum_x x * chi_a(x) is the character sum of the a-th odd
    character.  The product of the cyclic shifts f(T^a) taken modulo
    T^(p-1) - 1 is Galois-stable, so it reduces to an integer constant
    modulo the (p-1)-th cyclotomic polynomial.
    """
    n = p - 1
    g = primitive_root(p)
    f = [0] * n
    acc = 1
    for j in range(n):
        f[j] = acc
        acc = (acc * g) % p
    prod = None
    for a in range(1, n, 2):
        shifted = [0] * n
        for j, x in enumerate(f):
            shifted[(a * j) % n] += x
        prod = shifted if prod is None else _cyclic_mul(prod, shifted, n)
    poly = Poly(ZZ, tuple(prod))
    q, r = divmod(poly, cyclotomic(n))
    if r.degree > 0:
        raise InternalCheckError("character-sum product is not Galois-stable")
    c = int(r.constant)
    num = c if (p - 1) // 2 % 2 == 0 else -c
    den = (2 * p) ** ((p - 1) // 2 - 1)
    if num <= 0 or num % den:
        raise InternalCheckError(
            f"character-sum value {num} is not a positive multiple of (2p)^((p-3)/2)")
    return num // den


def _hp_minus_maillet(p):
    """|det (a * b^-1 mod p)_{1<=a,b<=(p-1)/2}| / p^((p-3)/2).

    Entries are least positive residues; the normalization is calibrated
    against the character-sum method and frozen.
    """
    h = (p - 1) // 2
    inv = [0] * (h + 1)
    for b in range(1, h + 1):
        inv[b] = pow(b, p - 2, p)
    m = [[(a * inv[b]) % p for b in range(1, h + 1)] for a in range(1, h + 1)]
    d = abs(det_int(m))
    den = p ** ((p - 3) // 2)
    if d == 0 or d % den:
        raise InternalCheckError(
            f"Maillet determinant {d} is not a nonzero multiple of p^((p-3)/2)")
    return d // den


def hp_minus(p, bound=None):
    """First factor of the class number of Z[zeta_p], cross-checked."""
    _check_p(p, bound)
    h1 = _hp_minus_charsum(p)
    h2 = _hp_minus_maillet(p)
    if h1 != h2:
        raise InternalCheckError(
            f"h_{p}^- methods disagree: character sum {h1}, Maillet {h2}")
    return h1


def odd_prime_factor(n) -> Optional[int]:
    """Smallest odd prime dividing n, or None when n is a power of 2."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"need a positive integer, got {n}")
    return smallest_odd_prime_factor(n)


@dataclass
class HplusRecord:
    p: int
    factors: List[int]
    source: str
    heuristic: bool

    def odd_factor(self) -> Optional[int]:
        odd = [q for q in self.factors if q % 2]
        return min(odd) if odd else None


def default_fixture_path():
    return str(resources.files("cyclocover").joinpath("data/hplus.csv"))


def load_hplus_table(path) -> Dict[int, HplusRecord]:
    """Parse the h_p^+ fixture CSV: p,hplus_factors,source,heuristic."""
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise PreconditionError(f"cannot read fixture {path}: {exc}")
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            return {}
        if [h.strip() for h in header] != ["p", "hplus_factors", "source", "heuristic"]:
            raise PreconditionError(f"{path}:1: bad header {header!r}")
        table = {}
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 4:
                raise PreconditionError(f"{path}:{lineno}: expected 4 fields, got {len(row)}")
            p_raw, factors_raw, source, heur_raw = (f.strip() for f in row)
            try:
                p = int(p_raw)
            except ValueError:
                raise PreconditionError(f"{path}:{lineno}: bad prime {p_raw!r}")
            if not is_prime(p):
                raise PreconditionError(f"{path}:{lineno}: {p} is not prime")
            if p in table:
                raise PreconditionError(f"{path}:{lineno}: duplicate entry for p={p}")
            factors = []
            for tok in factors_raw.split(";"):
                tok = tok.strip()
                if not tok:
                    continue
                try:
                    q = int(tok)
                except ValueError:
                    raise PreconditionError(f"{path}:{lineno}: bad factor {tok!r}")
                if q < 2 or not is_prime(q):
                    raise PreconditionError(f"{path}:{lineno}: factor {q} is not prime")
                factors.append(q)
            if heur_raw.lower() in ("true", "1", "yes"):
                heuristic = True
            elif heur_raw.lower() in ("false", "0", "no"):
                heuristic = False
            else:
                raise PreconditionError(f"{path}:{lineno}: bad heuristic flag {heur_raw!r}")
            table[p] = HplusRecord(p, factors, source, heuristic)
    return table


@dataclass
class ClassGateReport:
    p: int
    h_minus: int
    h_minus_odd_factor: Optional[int]
    h_plus_entry: Optional[HplusRecord]
    h_plus_odd_factor: Optional[int]
    gate: Optional[bool]            # None when p is absent from the fixture


def gate_theorem_CD(p, fixture, bound=None) -> ClassGateReport:
    """Do both h_p^- and (per the fixture) h_p^+ have odd prime factors?"""
    h = hp_minus(p, bound)
    minus_odd = odd_prime_factor(h)
    entry = fixture.get(p)
    if entry is None:
        return ClassGateReport(p, h, minus_odd, None, None, None)
    plus_odd = entry.odd_factor()
    gate = minus_odd is not None and plus_odd is not None
    return ClassGateReport(p, h, minus_odd, entry, plus_odd, gate)
