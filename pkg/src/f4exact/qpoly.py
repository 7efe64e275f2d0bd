"""Exact polynomial arithmetic in Z[q], cyclotomic factorization, generic
orders of twisted subgroups via a twisted Molien series, center orders and
l-adic valuation rules.

No floating point anywhere; power series are truncated lists of Fractions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Sequence, Tuple


class NonCyclotomicFactor(ValueError):
    pass


class MolienExtractionFailure(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer polynomials, coefficient lists low-to-high


def p_trim(c: List[int]) -> List[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def p_add(a: Sequence[int], b: Sequence[int]) -> List[int]:
    n = max(len(a), len(b))
    return p_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def p_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return p_trim(out)


def p_divmod(a: Sequence[int], b: Sequence[int]):
    """Division in Z[q]; the divisor must be monic up to sign."""
    a = p_trim(list(a))
    b = p_trim(list(b))
    if not b:
        raise ZeroDivisionError
    if abs(b[-1]) != 1:
        raise ValueError("divisor must be monic up to sign")
    q = [0] * max(len(a) - len(b) + 1, 1)
    while a and len(a) >= len(b):
        k = len(a) - len(b)
        f = a[-1] * b[-1]
        q[k] = f
        for i, y in enumerate(b):
            a[i + k] -= f * y
        a = p_trim(a)
    return p_trim(q), a


def p_eval(c: Sequence[int], x: int) -> int:
    v = 0
    for a in reversed(c):
        v = v * x + a
    return v


@dataclass(frozen=True)
class QPoly:
    coeffs: Tuple[int, ...]

    @staticmethod
    def of(cs) -> "QPoly":
        return QPoly(tuple(p_trim(list(cs))))

    def __mul__(self, other: "QPoly") -> "QPoly":
        return QPoly.of(p_mul(self.coeffs, other.coeffs))

    def __call__(self, x: int) -> int:
        return p_eval(self.coeffs, x)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPoly:
    """The d-th cyclotomic polynomial, by exact division of q^d - 1."""
    num = [0] * d + [1]
    num[0] = -1
    for e in range(1, d):
        if d % e == 0:
            num, rem = p_divmod(num, cyclotomic(e).coeffs)
            assert not rem
    return QPoly.of(num)


@dataclass(frozen=True)
class CycFactored:
    """q^q_power times a product of cyclotomic polynomials Phi_d^mult."""

    q_power: int
    factors: Tuple[Tuple[int, int], ...]  # sorted (d, multiplicity) pairs

    def poly(self) -> QPoly:
        p = QPoly.of([0] * self.q_power + [1])
        for d, m in self.factors:
            for _ in range(m):
                p = p * cyclotomic(d)
        return p

    def value(self, q: int) -> int:
        v = q ** self.q_power
        for d, m in self.factors:
            v *= cyclotomic(d)(q) ** m
        return v

    def mult(self, d: int) -> int:
        return dict(self.factors).get(d, 0)


def factor_cyclotomic(p, max_d: int = 60) -> CycFactored:
    """Factor a +-monic product of a q-power and cyclotomic polynomials."""
    coeffs = p_trim(list(p.coeffs if isinstance(p, QPoly) else p))
    if not coeffs:
        raise NonCyclotomicFactor("zero polynomial")
    qpow = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        qpow += 1
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    if coeffs[-1] != 1:
        raise NonCyclotomicFactor("not monic up to sign")
    fac: Dict[int, int] = {}
    d = 1
    while len(coeffs) > 1:
        if d > max_d:
            raise NonCyclotomicFactor(
                "residual factor of degree %d" % (len(coeffs) - 1)
            )
        cd = cyclotomic(d).coeffs
        while len(coeffs) >= len(cd):
            q, r = p_divmod(coeffs, cd)
            if r:
                break
            fac[d] = fac.get(d, 0) + 1
            coeffs = q
        d += 1
    return CycFactored(qpow, tuple(sorted(fac.items())))


# ---------------------------------------------------------------------------
# Smith normal form over Z, elementary row/column ops, exact


def smith_normal_form(mat) -> List[int]:
    """Elementary divisors (with zeros for rank defect) of an integer matrix."""
    m = [list(map(int, row)) for row in mat]
    if not m or not m[0]:
        return []
    rows, cols = len(m), len(m[0])
    divisors = []
    r = c = 0
    while r < rows and c < cols:
        piv = None
        for i in range(r, rows):
            for j in range(c, cols):
                if m[i][j] and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        m[r], m[i0] = m[i0], m[r]
        for row in m:
            row[c], row[j0] = row[j0], row[c]
        done = False
        while not done:
            done = True
            for i in range(rows):
                if i != r and m[i][c]:
                    f = m[i][c] // m[r][c]
                    for j in range(cols):
                        m[i][j] -= f * m[r][j]
                    if m[i][c]:
                        m[r], m[i] = m[i], m[r]
                        done = False
            for j in range(cols):
                if j != c and m[r][j]:
                    f = m[r][j] // m[r][c]
                    for i in range(rows):
                        m[i][j] -= f * m[i][c]
                    if m[r][j]:
                        for i in range(rows):
                            m[i][c], m[i][j] = m[i][j], m[i][c]
                        done = False
        divisors.append(abs(m[r][c]))
        r += 1
        c += 1
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            a, b = divisors[i], divisors[j]
            if a and b:
                g = gcd(a, b)
                divisors[i], divisors[j] = g, a * b // g
    return divisors


def abelian_invariants(mat) -> List[int]:
    """Nontrivial invariant factors of coker(mat: Z^n -> Z^m)."""
    return sorted(d for d in smith_normal_form(mat) if d not in (0, 1))


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def det_int(a) -> int:
    """Fraction-free (Bareiss) determinant of a small integer matrix."""
    a = [list(map(int, row)) for row in a]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def charpoly_int(mat) -> List[int]:
    """det(x*I - M) by Faddeev-LeVerrier; exact, coefficients low-to-high."""
    n = len(mat)
    M = [list(map(int, row)) for row in mat]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [row[:] for row in M]
    for k in range(1, n + 1):
        tr = sum(Mk[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                Mk[i][i] += c
            Mk = [
                [sum(M[i][l] * Mk[l][j] for l in range(n)) for j in range(n)]
                for i in range(n)
            ]
    return coeffs


def poly_det(m) -> List[int]:
    """Determinant of a matrix of integer polynomials (permanent-style sum)."""
    n = len(m)
    total: List[int] = []
    for perm in itertools.permutations(range(n)):
        inv = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if perm[i] > perm[j]
        )
        term = [1 - 2 * (inv % 2)]
        for i in range(n):
            term = p_mul(term, m[i][perm[i]])
            if not term:
                break
        total = p_add(total, term)
    return total


def rank_frac(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    rank = 0
    for col in range(len(rows[0])):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank


def solve_frac(basis, target):
    """Coefficients expressing target in the given spanning set (over Q)."""
    n = len(basis)
    dim = len(target)
    rows = [
        [Fraction(basis[j][i]) for j in range(n)] + [Fraction(target[i])]
        for i in range(dim)
    ]
    piv_rows: List[Tuple[int, int]] = []
    for col in range(n):
        piv = None
        used = {p[0] for p in piv_rows}
        for i in range(dim):
            if i not in used and rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        piv_rows.append((piv, col))
        pr = rows[piv]
        for i in range(dim):
            if i != piv and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
    sol = [Fraction(0)] * n
    for i, col in piv_rows:
        sol[col] = rows[i][n] / rows[i][col]
    return sol


# ---------------------------------------------------------------------------
# power series and the twisted Molien order


def _series_inv(c: List[Fraction], n: int) -> List[Fraction]:
    assert c[0] != 0
    out = [Fraction(0)] * n
    out[0] = 1 / c[0]
    for k in range(1, n):
        s = Fraction(0)
        for i in range(1, min(k, len(c) - 1) + 1):
            s += c[i] * out[k - i]
        out[k] = -s / c[0]
    return out


def twisted_molien_order(coset_mats, n_positive: int, trunc: int = 44) -> CycFactored:
    """Generic order from the coset {u*v : u in W_Gamma-bar} acting on X.

    The graded trace of the twist on the invariant ring is
    P(t) = (1/|W|) sum_{w in coset} det(1 - t w)^{-1}
         = prod_i (1 - eps_i t^{d_i})^{-1},
    so Q = 1/P is a polynomial with integer coefficients; the generic order is
    q^n_positive * t^deg(Q) * Q(1/t) evaluated at t = q, a cyclotomic product.
    """
    order = len(coset_mats)
    counts: Dict[Tuple[int, ...], int] = {}
    for m in coset_mats:
        cp = tuple(charpoly_int(m))
        counts[cp] = counts.get(cp, 0) + 1
    series = [Fraction(0)] * trunc
    for cp, cnt in counts.items():
        det1 = [Fraction(c) for c in reversed(cp)]  # det(1 - tM)
        inv = _series_inv(det1, trunc)
        for i in range(trunc):
            series[i] += cnt * inv[i]
    for i in range(trunc):
        series[i] /= order
    if series[0] != 1:
        raise MolienExtractionFailure("constant term %s" % series[0])
    q_series = _series_inv(series, trunc)
    deg = max((i for i, c in enumerate(q_series) if c != 0), default=0)
    if deg > trunc - 12:
        raise MolienExtractionFailure("Molien inverse did not terminate")
    qq = []
    for c in q_series[: deg + 1]:
        if c.denominator != 1:
            raise MolienExtractionFailure("non-integral Molien inverse")
        qq.append(int(c))
    rev = p_trim(list(reversed(qq)))
    return factor_cyclotomic([0] * n_positive + rev)


def generic_order(gamma, v=None) -> CycFactored:
    """Generic order of the maximal-rank subgroup with closed subsystem
    generated by gamma, twisted by v (a Weyl element normalizing it)."""
    from . import weyl

    rs = weyl.root_system()
    closed = rs.closure(gamma)
    npos = sum(1 for i in closed if i <= 24)
    sub = weyl.reflection_subgroup(closed)
    if v is None:
        v = weyl.identity()
    if not weyl.normalizes(v, closed):
        raise MolienExtractionFailure("twist does not normalize the subsystem")
    coset = [(u * v).mat for u in sub]
    return twisted_molien_order(coset, npos)


# ---------------------------------------------------------------------------
# valuations


class NonAffineValuation(ValueError):
    pass


def ell_valuation(ord_: CycFactored, ell: int, e: int) -> Tuple[int, int]:
    """v_ell of a cyclotomic product as an affine pair (c, c0) meaning c*a + c0,
    where ell^a || Phi_e(q).

    Rule: v_ell(Phi_e(q)) = a; v_ell(Phi_{e*ell^i}(q)) = 1 for i >= 1; other
    cyclotomic factors and the q-power contribute 0 (ell odd, prime to q).
    """
    if ell < 3 or ell % 2 == 0:
        raise ValueError("odd primes only")
    c = c0 = 0
    for d, m in ord_.factors:
        if d == e:
            c += m
        else:
            dd = d
            while dd % ell == 0:
                dd //= ell
            if dd == e and d != e:
                c0 += m
    return (c, c0)


def valuation_int(n: int, ell: int) -> int:
    v = 0
    n = abs(n)
    while n and n % ell == 0:
        n //= ell
        v += 1
    return v


# ---------------------------------------------------------------------------
# center orders


def _lattice_basis(vectors) -> List[List[int]]:
    """Primitive basis of the saturation of the span of the given vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    basis = []
    rank = 0
    if not rows:
        return []
    for col in range(len(rows[0])):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
    out = []
    for b in rows[:rank]:
        den = 1
        for x in b:
            den = den * x.denominator // gcd(den, x.denominator)
        iv = [int(x * den) for x in b]
        g = 0
        for x in iv:
            g = gcd(g, abs(x))
        out.append([x // g for x in iv])
    return out


def center_order_poly(gamma, v=None) -> CycFactored:
    """Generic order of the connected-center torus of L_gamma twisted by v:
    det(q*v - 1) on X modulo the saturated root span."""
    from . import weyl

    rs = weyl.root_system()
    closed = rs.closure(gamma)
    if v is None:
        v = weyl.identity()
    span = [list(rs.coords[i]) for i in sorted(closed) if i <= 24]
    sat = _lattice_basis(span)
    comp = []
    cur = [r[:] for r in sat]
    for i in range(4):
        e = [0] * 4
        e[i] = 1
        if rank_frac(cur + [e]) > len(cur):
            cur.append(e)
            comp.append(e)
    k = len(comp)
    if k == 0:
        return CycFactored(0, ())
    full = sat + comp
    M = v.mat
    act_cols = []
    for b in comp:
        img = [sum(M[i][j] * b[j] for j in range(4)) for i in range(4)]
        coords = solve_frac(full, img)
        col = coords[len(sat):]
        assert all(c.denominator == 1 for c in col)
        act_cols.append([int(c) for c in col])
    A = [[act_cols[j][i] for j in range(k)] for i in range(k)]
    entries = [
        [([-(i == j), A[i][j]] if A[i][j] or i == j else []) for j in range(k)]
        for i in range(k)
    ]
    det = poly_det(entries)
    if det and det[-1] < 0:
        det = [-c for c in det]
    return factor_cyclotomic(det)


def center_order(gamma, v, q: int) -> List[int]:
    """Abelian invariants of Z(M)^F at a concrete q: cokernel of
    [roots of gamma-bar | q*M_v - 1] on X."""
    from . import weyl

    rs = weyl.root_system()
    closed = rs.closure(gamma)
    if v is None:
        v = weyl.identity()
    M = v.mat
    cols = [list(rs.coords[i]) for i in sorted(closed) if i <= 24]
    for j in range(4):
        cols.append([q * M[i][j] - (i == j) for i in range(4)])
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(4)]
    return abelian_invariants(mat)
