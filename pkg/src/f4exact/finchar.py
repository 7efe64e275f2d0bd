"""Small permutation-group engine: enumeration, conjugacy classes, character
degrees via Dixon's modular method, defect-zero counting, and a catalog of
concrete constructions for the outer-automorphism groups named in the block
tables.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Poly, Rational, Symbol, factor_list, nextprime

Permutation = Tuple[int, ...]


class UnknownGroup(KeyError):
    pass


class PrimeSearchFailure(RuntimeError):
    pass


def _pmul(a: Permutation, b: Permutation) -> Permutation:
    """a then b? Convention: (a*b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(a)))


def _pinv(a: Permutation) -> Permutation:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


class PermGroup:
    def __init__(self, degree: int, generators: Sequence[Permutation], name: str = ""):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        self.name = name
        self._elements: Optional[List[Permutation]] = None
        self._classes = None
        self._degrees = None

    @property
    def identity(self) -> Permutation:
        return tuple(range(self.degree))

    def elements(self) -> List[Permutation]:
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                new = []
                for w in frontier:
                    for g in self.generators:
                        x = _pmul(w, g)
                        if x not in seen:
                            seen.add(x)
                            new.append(x)
                frontier = new
            self._elements = sorted(seen)
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def element_order(self, g: Permutation) -> int:
        n, x = 1, g
        e = self.identity
        while x != e:
            x = _pmul(x, g)
            n += 1
        return n

    def conjugacy_classes(self) -> List[List[Permutation]]:
        if self._classes is None:
            elems = self.elements()
            unassigned = set(elems)
            classes = []
            gens = self.generators + [_pinv(g) for g in self.generators]
            while unassigned:
                seed = min(unassigned)
                orbit = {seed}
                frontier = [seed]
                while frontier:
                    new = []
                    for x in frontier:
                        for g in gens:
                            y = _pmul(_pmul(_pinv(g), x), g)
                            if y not in orbit:
                                orbit.add(y)
                                new.append(y)
                    frontier = new
                unassigned -= orbit
                classes.append(sorted(orbit))
            classes.sort(key=lambda c: (self.element_order(c[0]), len(c), c[0]))
            self._classes = classes
        return self._classes

    def exponent(self) -> int:
        e = 1
        for c in self.conjugacy_classes():
            e = math.lcm(e, self.element_order(c[0]))
        return e

    def abelian_invariants(self) -> Tuple[int, ...]:
        """Invariants of G/[G,G], from the commutator-subgroup quotient."""
        elems = self.elements()
        idx = {g: i for i, g in enumerate(elems)}
        comm_gens = []
        for a in self.generators:
            for b in self.generators:
                comm_gens.append(
                    _pmul(_pmul(_pinv(a), _pinv(b)), _pmul(a, b))
                )
        # closure of normal subgroup generated by commutators
        der = {self.identity}
        frontier = list({c for c in comm_gens})
        der.update(frontier)
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    for y in (
                        _pmul(_pmul(_pinv(g), x), g),
                        *(
                            (_pmul(x, c),)
                            for c in comm_gens
                        ),
                    ):
                        if y not in der:
                            der.add(y)
                            new.append(y)
            frontier = new
        # abelian quotient: cosets with multiplication by generators
        reps = {}
        cos_of = {}
        for g in elems:
            key = min(_pmul(g, d) for d in der)
            if key not in reps:
                reps[key] = len(reps)
            cos_of[g] = reps[key]
        k = len(reps)
        if k == 1:
            return ()
        # abelian group of order k generated by generator cosets: find its
        # invariants by building the multiplication structure
        rep_list = [None] * k
        for key, i in reps.items():
            rep_list[i] = key
        # orders of elements in the quotient
        from collections import Counter

        hist = Counter()
        for key in rep_list:
            n, x = 1, key
            while cos_of[x] != cos_of[self.identity]:
                x = min(_pmul(_pmul(key, x), d) for d in der)
                n += 1
            hist[n] += 1
        return _abelian_invariants_from_order_histogram(k, dict(hist))

    def signature(self):
        """(order, abelianization invariants, element-order histogram)."""
        from collections import Counter

        hist = Counter()
        for c in self.conjugacy_classes():
            hist[self.element_order(c[0])] += len(c)
        return (
            self.order(),
            tuple(self.abelian_invariants()),
            tuple(sorted(hist.items())),
        )


def _abelian_invariants_from_order_histogram(order: int, hist: Dict[int, int]) -> Tuple[int, ...]:
    """Invariant factors of an abelian group from its order histogram."""
    import itertools

    # search over partitions: tiny groups only (quotients of catalog groups)
    def candidates(n):
        divs = [d for d in range(2, n + 1) if n % d == 0]
        out = []

        def rec(rem, mx, cur):
            if rem == 1:
                out.append(tuple(cur))
                return
            for d in divs:
                if d <= mx and rem % d == 0 and all(x % d == 0 for x in cur[-1:]):
                    rec(rem // d, d, cur + [d])

        rec(n, n, [])
        res = []
        for c in out:
            # invariant factor chains d_k | ... | d_1
            ok = all(c[i] % c[i + 1] == 0 for i in range(len(c) - 1))
            if ok:
                res.append(tuple(sorted(c)))
        return set(res)

    def hist_of(invs):
        from collections import Counter

        h = Counter()
        ranges = [range(d) for d in invs]
        for tup in itertools.product(*ranges):
            o = 1
            for d, x in zip(invs, tup):
                if x:
                    o = math.lcm(o, d // math.gcd(d, x))
            h[o] += 1
        return dict(h)

    for invs in sorted(candidates(order)):
        if hist_of(invs) == hist:
            return invs
    raise RuntimeError("no abelian invariants match histogram")


# ---------------------------------------------------------------------------
# Dixon's method


def dixon_prime(order: int, exponent: int) -> int:
    p = max(int(2 * math.isqrt(order)) + 1, 3)
    # smallest prime p > 2 sqrt(|G|) with p = 1 mod exponent
    k = p // exponent + 1
    while True:
        cand = k * exponent + 1
        if cand > p - 1 and _is_prime(cand):
            return cand
        k += 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _class_matrices_action(G: PermGroup):
    """Sparse data for the action of class sums on the center basis."""
    classes = G.conjugacy_classes()
    r = len(classes)
    cls_of = {}
    for i, c in enumerate(classes):
        for g in c:
            cls_of[g] = i
    reps = [c[0] for c in classes]
    inv_class = [cls_of[_pinv(reps[i])] for i in range(r)]
    # a[i][j][k]: number of (x,y) in C_i x C_j with xy = rep_k
    mats = []
    for i in range(r):
        m = [[0] * r for _ in range(r)]
        for x in classes[i]:
            xi = _pinv(x)
            for k in range(r):
                y = _pmul(xi, reps[k])
                m[cls_of[y]][k] += 1
        mats.append(np.array(m, dtype=np.int64))
    return classes, mats, inv_class


def _nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (rows) of the right null space of A over GF(p)."""
    A = A % p
    n = A.shape[1]
    A = A.copy()
    pivots = []
    row = 0
    for col in range(n):
        sel = None
        for i in range(row, A.shape[0]):
            if A[i, col] % p:
                sel = i
                break
        if sel is None:
            continue
        A[[row, sel]] = A[[sel, row]]
        inv = pow(int(A[row, col]), p - 2, p)
        A[row] = (A[row] * inv) % p
        for i in range(A.shape[0]):
            if i != row and A[i, col]:
                A[i] = (A[i] - A[i, col] * A[row]) % p
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = np.zeros(n, dtype=np.int64)
        v[fc] = 1
        for rw, pc in enumerate(pivots):
            v[pc] = (-A[rw, fc]) % p
        basis.append(v % p)
    return np.array(basis, dtype=np.int64) if basis else np.zeros((0, n), dtype=np.int64)


def character_degrees(G: PermGroup) -> List[int]:
    """Irreducible character degrees (with multiplicity) via Dixon's
    class-matrix eigenvector method over GF(p)."""
    if G._degrees is not None:
        return G._degrees
    classes, mats, inv_class = _class_matrices_action(G)
    r = len(classes)
    n = G.order()
    if r == 1:
        G._degrees = [1]
        return G._degrees
    p = dixon_prime(n, G.exponent())
    # split the center into common eigenspaces; the class matrices act on
    # column vectors, so work with rows against the transpose
    spaces = [np.eye(r, dtype=np.int64)]
    for m in mats:
        if all(s.shape[0] == 1 for s in spaces):
            break
        mt = m.T
        new_spaces = []
        for s in spaces:
            if s.shape[0] == 1:
                new_spaces.append(s)
                continue
            sm = (s @ mt) % p
            B = _solve_rowspace(s, sm, p)
            evs = _eigenvalues_mod(B, p)
            for lam in evs:
                ns = _nullspace_mod((B - lam * np.eye(B.shape[0], dtype=np.int64)) % p, p)
                if ns.shape[0]:
                    new_spaces.append((ns @ s) % p)
        spaces = new_spaces
    if any(s.shape[0] != 1 for s in spaces) or len(spaces) != r:
        raise PrimeSearchFailure("eigenspace splitting failed at p=%d" % p)
    sizes = [len(c) for c in classes]
    degrees = []
    npart = n % p
    for s in spaces:
        v = s[0] % p
        # normalize v_1 (class of identity) to 1
        id_idx = next(i for i, c in enumerate(classes) if c[0] == G.identity)
        if v[id_idx] % p == 0:
            raise PrimeSearchFailure("degenerate eigenvector")
        v = (v * pow(int(v[id_idx]), p - 2, p)) % p
        # omega_i = chi(g_i) |C_i| / d; sum_i omega_i omega_{i*} / |C_i| = n/d^2
        acc = 0
        for i in range(r):
            acc = (acc + v[i] * v[inv_class[i]] * pow(sizes[i], p - 2, p)) % p
        d2 = (npart * pow(int(acc), p - 2, p)) % p
        d = None
        lim = math.isqrt(n)
        for cand in range(1, lim + 1):
            if cand * cand % p == d2 and n % cand == 0:
                d = cand
                break
        if d is None:
            raise PrimeSearchFailure("no degree matches d^2 mod p")
        degrees.append(d)
    degrees.sort()
    if sum(d * d for d in degrees) != n:
        raise PrimeSearchFailure("degree squares do not sum to |G|")
    G._degrees = degrees
    return degrees


def _solve_rowspace(s: np.ndarray, sm: np.ndarray, p: int) -> np.ndarray:
    """B with B @ s = sm (mod p), rows of s independent."""
    k, r = s.shape
    # solve s^T B^T = sm^T column by column via Gaussian elimination
    A = s.T % p  # r x k
    rhs = sm.T % p  # r x k
    aug = np.concatenate([A, rhs], axis=1).copy()
    row = 0
    pivots = []
    for col in range(k):
        sel = None
        for i in range(row, r):
            if aug[i, col] % p:
                sel = i
                break
        if sel is None:
            continue
        aug[[row, sel]] = aug[[sel, row]]
        inv = pow(int(aug[row, col]), p - 2, p)
        aug[row] = (aug[row] * inv) % p
        for i in range(r):
            if i != row and aug[i, col]:
                aug[i] = (aug[i] - aug[i, col] * aug[row]) % p
        pivots.append(col)
        row += 1
    if len(pivots) != k:
        raise PrimeSearchFailure("row space solve failed")
    BT = aug[:k, k:]
    return BT.T % p


def _eigenvalues_mod(B: np.ndarray, p: int) -> List[int]:
    """Eigenvalues of B over GF(p), by scanning (class matrices split over
    GF(p) by the choice of p)."""
    out = []
    k = B.shape[0]
    for lam in range(p):
        M = (B - lam * np.eye(k, dtype=np.int64)) % p
        if _rank_mod(M, p) < k:
            out.append(lam)
    return out


def _rank_mod(A: np.ndarray, p: int) -> int:
    A = A % p
    A = A.copy()
    rows, cols = A.shape
    rank = 0
    for col in range(cols):
        sel = None
        for i in range(rank, rows):
            if A[i, col] % p:
                sel = i
                break
        if sel is None:
            continue
        A[[rank, sel]] = A[[sel, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        for i in range(rank + 1, rows):
            if A[i, col]:
                A[i] = (A[i] - A[i, col] * A[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def character_degrees_rational(G: PermGroup) -> List[int]:
    """Independent oracle: decompose the center of the group algebra over Q
    by factoring the minimal polynomial of a primitive class-sum combination;
    each rational idempotent spans a Galois orbit of equal-degree characters.
    """
    classes, mats, inv_class = _class_matrices_action(G)
    r = len(classes)
    n = G.order()
    if r == 1:
        return [1]
    x = Symbol("x")
    # find a combination whose minimal polynomial is squarefree of degree r
    for attempt in range(1, 40):
        coeffs = [pow(attempt, i, 10007) % 17 - 8 for i in range(r)]
        M = sum(c * m for c, m in zip(coeffs, mats))
        P = Poly(_charpoly_sympy(M), x)
        fl = factor_list(P.as_expr())
        facs = [Poly(f, x) for f, mult in fl[1] for _ in range(1)]
        if all(mult == 1 for _, mult in fl[1]):
            break
    else:
        raise RuntimeError("no primitive class combination found")
    degrees: List[int] = []
    sizes = [len(c) for c in classes]
    id_idx = next(i for i, c in enumerate(classes) if c[0] == G.identity)
    Mq = np.array(M, dtype=object)
    for f, _ in fl[1]:
        fp = Poly(f, x)
        # idempotent component: kernel of f(M); each vector is a common
        # eigenvector family over the field Q[x]/(f)
        dim = fp.degree()
        # evaluate f at M over Q exactly
        fM = _poly_at_matrix(fp, Mq)
        null = _nullspace_rational(fM)
        assert null, "empty rational eigenspace"
        # use any kernel vector; normalize at identity class;
        # degree^2 = |G| / sum_i v_i v_{i*}/|C_i| must be rational degree^2
        for v in null:
            if v[id_idx] != 0:
                break
        v = [Rational(c, 1) / v[id_idx] for c in v]
        acc = Rational(0)
        for i in range(r):
            acc += v[i] * v[inv_class[i]] / sizes[i]
        d2 = Rational(n, 1) / acc
        # d2 may be irrational component-wise only if v not an eigenvector;
        # for Galois orbits the symmetrized value is the common degree
        d = int(math.isqrt(int(d2)))
        assert d * d == d2, "non-square degree^2 in rational oracle"
        degrees.extend([d] * dim)
    degrees.sort()
    if sum(d * d for d in degrees) != n:
        raise RuntimeError("rational oracle degrees do not sum correctly")
    return degrees


def _charpoly_sympy(M: np.ndarray):
    from sympy import Matrix

    return Matrix(M.tolist()).charpoly().as_expr()


def _poly_at_matrix(fp, Mq: np.ndarray) -> np.ndarray:
    n = Mq.shape[0]
    acc = np.zeros((n, n), dtype=object)
    for c in fp.all_coeffs():  # high to low, Horner
        acc = acc @ Mq
        for i in range(n):
            acc[i, i] = acc[i, i] + int(c)
    return acc


def _nullspace_rational(A: np.ndarray) -> List[List]:
    from fractions import Fraction

    rows, cols = A.shape
    M = [[Fraction(int(A[i, j].p), int(A[i, j].q)) if hasattr(A[i, j], "p") else Fraction(A[i, j]) for j in range(cols)] for i in range(rows)]
    pivots = []
    row = 0
    for col in range(cols):
        sel = None
        for i in range(row, rows):
            if M[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        M[row], M[sel] = M[sel], M[row]
        pv = M[row][col]
        M[row] = [x / pv for x in M[row]]
        for i in range(rows):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(cols) if c not in pivots]
    out = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for rw, pc in enumerate(pivots):
            v[pc] = -M[rw][fc]
        out.append(v)
    return out


def defect_zero_count(G: PermGroup, ell: int) -> int:
    """Number of irreducible degrees with full ell-part of |G|."""
    n = G.order()
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    cnt = 0
    for d in character_degrees(G):
        dv = 0
        dd = d
        while dd % ell == 0:
            dd //= ell
            dv += 1
        if dv == v:
            cnt += 1
    return cnt


# ---------------------------------------------------------------------------
# catalog of concrete constructions


def _cyclic(n: int) -> List[Permutation]:
    return [tuple((i + 1) % n for i in range(n))] if n > 1 else [()]


def _direct(groups: List[PermGroup], name: str) -> PermGroup:
    degs = [g.degree for g in groups]
    total = sum(degs)
    gens = []
    off = 0
    for g in groups:
        for p in g.generators:
            whole = list(range(total))
            for i, j in enumerate(p):
                whole[off + i] = off + j
            gens.append(tuple(whole))
        off += g.degree
    return PermGroup(total, gens, name)


def _vectors_f3(dim: int) -> List[Tuple[int, ...]]:
    import itertools

    return [v for v in itertools.product(range(3), repeat=dim) if any(v)]


def _matrix_perm_f3(mat, dim: int) -> Permutation:
    vecs = _vectors_f3(dim)
    idx = {v: i for i, v in enumerate(vecs)}
    out = []
    for v in vecs:
        w = tuple(sum(mat[i][j] * v[j] for j in range(dim)) % 3 for i in range(dim))
        out.append(idx[w])
    return tuple(out)


def _sl2_3_gens() -> List[Permutation]:
    return [
        _matrix_perm_f3([[1, 1], [0, 1]], 2),
        _matrix_perm_f3([[0, -1], [1, 0]], 2),
    ]


def _gl2_3_gens() -> List[Permutation]:
    return _sl2_3_gens() + [_matrix_perm_f3([[1, 0], [0, -1]], 2)]


def _sl3_3_gens() -> List[Permutation]:
    return [
        _matrix_perm_f3([[1, 1, 0], [0, 1, 0], [0, 0, 1]], 3),
        _matrix_perm_f3([[0, 0, 1], [1, 0, 0], [0, 1, 0]], 3),
        _matrix_perm_f3([[1, 0, 0], [0, 1, 1], [0, 0, 1]], 3),
    ]


def _signed_perm_group(rank: int) -> PermGroup:
    """W(B_rank) acting on the 2*rank points +-e_1..+-e_rank.
    Point 2i is e_{i+1}, point 2i+1 is -e_{i+1}."""
    deg = 2 * rank
    gens = []
    for i in range(rank - 1):
        p = list(range(deg))
        p[2 * i], p[2 * (i + 1)] = p[2 * (i + 1)], p[2 * i]
        p[2 * i + 1], p[2 * (i + 1) + 1] = p[2 * (i + 1) + 1], p[2 * i + 1]
        gens.append(tuple(p))
    p = list(range(deg))
    p[deg - 2], p[deg - 1] = p[deg - 1], p[deg - 2]
    gens.append(tuple(p))
    return PermGroup(deg, gens, "W(B%d)" % rank)


def _sym_group(n: int) -> PermGroup:
    gens = []
    if n >= 2:
        gens.append(tuple([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(n, gens, "S%d" % n)


def _dihedral(n: int) -> PermGroup:
    """Dihedral group of order n acting on n/2 points."""
    m = n // 2
    rot = tuple((i + 1) % m for i in range(m))
    refl = tuple((m - i) % m for i in range(m))
    return PermGroup(m, [rot, refl], "D%d" % n)


def _q8() -> PermGroup:
    # right regular action of Q8 = {+-1, +-i, +-j, +-k}
    # elements indexed 0..7: 1, -1, i, -i, j, -j, k, -k
    mul_i = (2, 3, 1, 0, 6, 7, 5, 4)
    mul_j = (4, 5, 7, 6, 1, 0, 2, 3)
    return PermGroup(8, [mul_i, mul_j], "Q8")


def _q8_triality() -> Permutation:
    # automorphism i -> j -> k -> i as a permutation of the 8 elements
    return (0, 1, 4, 5, 6, 7, 2, 3)


def _q8xq8_s3() -> PermGroup:
    q8 = _q8()
    base = _direct([q8, q8], "")
    tri = _q8_triality()
    sigma = tuple(list(tri) + [8 + x for x in tri])
    tau = tuple(list(range(8, 16)) + list(range(8)))
    return PermGroup(16, base.generators + [sigma, tau], "(Q8xQ8).S3")


def _sl2_swap() -> PermGroup:
    s = PermGroup(8, _sl2_3_gens(), "")
    base = _direct([s, s], "")
    tau = tuple(list(range(8, 16)) + list(range(8)))
    return PermGroup(16, base.generators + [tau], "(SL2(3)xSL2(3)).2")


def _gl23_outer_perm() -> Permutation:
    return _matrix_perm_f3([[1, 0], [0, -1]], 2)


def _sl2_ext4() -> PermGroup:
    """SL2(3):[4]: the order-4 extension acting through the diagonal outer
    automorphism, with c^2 central of order 2 outside SL2(3)."""
    sl2 = PermGroup(8, _sl2_3_gens(), "")
    gens = []
    for p in sl2.generators:
        gens.append(tuple(list(p) + [8, 9, 10, 11]))
    outer = _gl23_outer_perm()
    c = tuple(list(outer) + [9, 10, 11, 8])
    gens.append(c)
    return PermGroup(12, gens, "SL2(3).[4]")


def _four_sq_2() -> PermGroup:
    """[4]^2.2: centralizer in W(B4) of an element with two negative
    two-cycles (torus normalizer piece for the e=4 twist)."""
    w = _signed_perm_group(4)
    # element: e1 -> e2 -> -e1, e3 -> e4 -> -e3
    x = [0] * 8
    # pairs (2i, 2i+1) = (e_{i+1}, -e_{i+1})
    x[0], x[1] = 2, 3       # e1 -> e2
    x[2], x[3] = 1, 0       # e2 -> -e1
    x[4], x[5] = 6, 7       # e3 -> e4
    x[6], x[7] = 5, 4       # e4 -> -e3
    x = tuple(x)
    cent = [g for g in w.elements() if _pmul(g, x) == _pmul(x, g)]
    # find small generating set
    gens = _generating_subset(cent, 32)
    return PermGroup(8, gens, "[4]^2.2")


def _generating_subset(elements: List[Permutation], order: int) -> List[Permutation]:
    import random

    rng = random.Random(11)
    for k in (2, 3, 4):
        for _ in range(200):
            cand = rng.sample(elements, k)
            g = PermGroup(len(elements[0]), cand)
            if g.order() == order:
                return cand
    return elements


@lru_cache(maxsize=None)
def catalog(name: str) -> PermGroup:
    """Concrete permutation-group construction for a catalog name."""
    key = name.replace(" ", "")
    builders = _catalog_builders()
    if key not in builders:
        raise UnknownGroup(name)
    g = builders[key]()
    g.name = name
    return g


def _catalog_builders():
    def c(n):
        return lambda: PermGroup(max(n, 1), _cyclic(n) if n > 1 else [], str(n))

    def prod(*names):
        return lambda: _direct([catalog(n) for n in names], "x".join(names))

    def wf4():
        from . import weyl

        gens = [weyl.simple_reflection(i).perm for i in range(1, 5)]
        return PermGroup(48, gens, "W(F4)")

    def sp42():
        return _sym_group(6)

    return {
        "1": c(1),
        "2": c(2),
        "3": c(3),
        "[4]": c(4),
        "4": c(4),
        "2^2": prod("2", "2"),
        "2^3": prod("2", "2", "2"),
        "2^4": prod("2", "2", "2", "2"),
        "3^2": prod("3", "3"),
        "S3": lambda: _sym_group(3),
        "S3x2": prod("S3", "2"),
        "2xS3": prod("2", "S3"),
        "S3xS3": prod("S3", "S3"),
        "D8": lambda: _dihedral(8),
        "D12": lambda: _dihedral(12),
        "D8x2": prod("D8", "2"),
        "2xD8": prod("2", "D8"),
        "Q8": _q8,
        "SL2(3)": lambda: PermGroup(8, _sl2_3_gens(), "SL2(3)"),
        "GL2(3)": lambda: PermGroup(8, _gl2_3_gens(), "GL2(3)"),
        "SL2(3).2": lambda: PermGroup(8, _gl2_3_gens(), "SL2(3).2"),
        "SL2(3)x2": prod("SL2(3)", "2"),
        "2xSL2(3)": prod("2", "SL2(3)"),
        "SL2(3)x3": prod("SL2(3)", "3"),
        "SL2(3)xSL2(3)": prod("SL2(3)", "SL2(3)"),
        "(SL2(3)xSL2(3)).2": _sl2_swap,
        "(SL2(3)x2).2": prod("GL2(3)", "2"),
        "(2xSL2(3)).2": prod("2", "GL2(3)"),
        "SL2(3).[4]": _sl2_ext4,
        "SL2(3):[4]": _sl2_ext4,
        "[4]^2.2": _four_sq_2,
        "(Q8xQ8).S3": _q8xq8_s3,
        "SL3(3)": lambda: PermGroup(26, _sl3_3_gens(), "SL3(3)"),
        "W(A3)": lambda: _sym_group(4),
        "W(A2)": lambda: _sym_group(3),
        "W(C3)": lambda: _signed_perm_group(3),
        "W(B3)": lambda: _signed_perm_group(3),
        "W(B4)": lambda: _signed_perm_group(4),
        "W(C3)x2": prod("W(C3)", "2"),
        "W(A3)x2": prod("W(A3)", "2"),
        "2^3.S3": lambda: _signed_perm_group(3),
        "W(F4)": wf4,
        "Sp4(2)": sp42,
        "2xGL2(3)": prod("2", "GL2(3)"),
        "2xSL3(3)": prod("2", "SL3(3)"),
        "2xW(F4)": prod("2", "W(F4)"),
        "2xD8xSp4(2)": prod("2", "D8", "Sp4(2)"),
        "D8xSp4(2)": prod("D8", "Sp4(2)"),
        "2xSL2(3)x3": prod("2", "SL2(3)", "3"),
        "2xSL2(3):[4]": prod("2", "SL2(3).[4]"),
    }


CATALOG_ORDERS = {
    "SL2(3)": 24,
    "GL2(3)": 48,
    "SL3(3)": 5616,
    "W(F4)": 1152,
    "W(B4)": 384,
    "W(C3)": 48,
    "W(A3)": 24,
    "(Q8xQ8).S3": 384,
    "(SL2(3)xSL2(3)).2": 1152,
    "SL2(3).[4]": 96,
    "[4]^2.2": 32,
    "Sp4(2)": 720,
}
