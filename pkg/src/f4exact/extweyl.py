"""Chevalley basis structure constants for the F4 Lie algebra, adjoint
matrices for the one-parameter root elements, the lifts n_alpha and gamma,
and the extended Weyl group of order 2^4 * |W|.

Basis of the 52-dimensional algebra: e_1..e_48 (root vectors, indexed by the
root numbering) followed by h_1..h_4 (simple coroots).  Structure constants
are fixed by choosing N(alpha,beta) = +(p+1) on extraspecial pairs, with
positive roots ordered by (height, index); every other bracket is reduced to
these by Jacobi rewriting.  The convention is validated a posteriori by the
exhaustive antisymmetry / Jacobi / string-length checks.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from . import weyl
from .rootsys import build_f4

DIM = 52


class JacobiFailure(RuntimeError):
    pass


class GammaRelationFailure(RuntimeError):
    pass


class LiftCheckFailure(RuntimeError):
    pass


def _height(coords) -> int:
    return sum(coords)


@lru_cache(maxsize=1)
def _defining_pairs() -> Dict[int, Tuple[int, int, int]]:
    """For each non-simple positive root g: (i, b, N) with alpha_i simple,
    alpha_i + alpha_b = alpha_g, (i, b) the extraspecial pair of g, and
    N = p+1 for p the largest integer with alpha_b - p*alpha_i a root."""
    rs = build_f4()
    out = {}
    for g in range(5, 25):
        for i in range(1, 5):
            diff = tuple(a - b for a, b in zip(rs.coords[g], rs.coords[i]))
            b = rs.index_of.get(diff)
            if b is not None and b <= 24:
                p = 0
                cur = rs.coords[b]
                while True:
                    nxt = tuple(a - b_ for a, b_ in zip(cur, rs.coords[i]))
                    if nxt in rs.index_of:
                        p += 1
                        cur = nxt
                    else:
                        break
                out[g] = (i, b, p + 1)
                break
        else:
            raise RuntimeError("no extraspecial pair for root %d" % g)
    return out


class _Chevalley:
    """Bracket table built by height induction from the extraspecial pairs.

    Positive special pairs are resolved against the extraspecial pair of
    their sum by a three-term Jacobi relation; mixed-sign pairs by expanding
    the root of larger height (the height-sum strictly decreases); negative
    pairs by N(-a,-b) = -N(a,b).  Everything is certified afterwards.
    """

    def __init__(self):
        self.rs = build_f4()
        self._cache: Dict[Tuple[int, int], Tuple[int, ...]] = {}

    # basis indices: 0..47 root vectors e_{i+1}; 48..51 h_1..h_4

    def _zero(self):
        return (0,) * DIM

    def _unit(self, k, c=1):
        v = [0] * DIM
        v[k] = c
        return tuple(v)

    def _h_vec(self, alpha: int):
        """h_alpha = the coroot of alpha expanded in h_1..h_4."""
        cc = self.rs.coroot_coords[alpha]
        v = [0] * DIM
        for j in range(4):
            v[48 + j] = cc[j]
        return tuple(v)

    def _ht(self, alpha: int) -> int:
        """Signed height of the root with index alpha."""
        return _height(self.rs.coords[alpha])

    def bracket_basis(self, a: int, b: int) -> Tuple[int, ...]:
        """[basis_a, basis_b] as a coefficient vector."""
        if a == b:
            return self._zero()
        key = (a, b)
        if key in self._cache:
            return self._cache[key]
        val = self._compute(a, b)
        self._cache[key] = val
        self._cache[(b, a)] = tuple(-x for x in val)
        return val

    def bracket(self, v, w) -> Tuple[int, ...]:
        out = [0] * DIM
        for i, x in enumerate(v):
            if not x:
                continue
            for j, y in enumerate(w):
                if not y:
                    continue
                bb = self.bracket_basis(i, j)
                c = x * y
                for k, z in enumerate(bb):
                    if z:
                        out[k] += c * z
        return tuple(out)

    def n_coeff(self, alpha: int, beta: int) -> int:
        """N(alpha, beta) for root indices with alpha + beta a root."""
        k = self.rs.sum_table[(alpha, beta)]
        return self.bracket_basis(alpha - 1, beta - 1)[k - 1]

    def _compute(self, a: int, b: int) -> Tuple[int, ...]:
        rs = self.rs
        if a >= 48 and b >= 48:
            return self._zero()
        if a >= 48:
            i = a - 48 + 1
            c = rs.pairing(rs.coords[b + 1], rs.coroot_coords[i])
            return self._unit(b, c)
        if b >= 48:
            return tuple(-x for x in self.bracket_basis(b, a))
        alpha, beta = a + 1, b + 1
        if rs.neg(alpha) == beta:
            if alpha <= 24:
                return self._h_vec(alpha)
            return tuple(-x for x in self._h_vec(beta))
        s = tuple(x + y for x, y in zip(rs.coords[alpha], rs.coords[beta]))
        if s not in rs.index_of:
            return self._zero()
        g = rs.index_of[s]
        pos_a, pos_b = alpha <= 24, beta <= 24
        if pos_a and pos_b:
            n = self._positive_pair(alpha, beta, g)
            return self._unit(g - 1, n)
        if not pos_a and not pos_b:
            n = -self._positive_pair_of(rs.neg(alpha), rs.neg(beta))
            return self._unit(g - 1, n)
        # mixed pair: expand the argument of larger |height|
        if abs(self._ht(alpha)) >= abs(self._ht(beta)):
            return self._expand_first(alpha, b)
        return tuple(-x for x in self._expand_first(beta, a))

    def _positive_pair_of(self, alpha: int, beta: int) -> int:
        g = self.rs.sum_table[(alpha, beta)]
        return self._positive_pair(alpha, beta, g)

    def _positive_pair(self, alpha: int, beta: int, g: int) -> int:
        """N(alpha,beta) for positive roots summing to the positive root g."""
        r, s_, n_def = _defining_pairs().get(g, (None, None, None))
        if r is None:
            raise RuntimeError("positive sum %d has no defining pair" % g)
        if (alpha, beta) == (r, s_):
            return n_def
        if (alpha, beta) == (s_, r):
            return -n_def
        rs = self.rs
        neg_r = r + 24
        # Jacobi on (e_{-r}, e_alpha, e_beta); every term lies in e_{s_}:
        #   N(-r,alpha) N(alpha-r,beta) + N(alpha,beta) N(g,-r)
        #     + N(beta,-r) N(beta-r,alpha) = 0
        t1 = 0
        k1 = rs.sum_table.get((neg_r, alpha))
        if k1 is not None:
            t1 = self.n_coeff(neg_r, alpha) * self.n_coeff(k1, beta)
        t3 = 0
        k3 = rs.sum_table.get((beta, neg_r))
        if k3 is not None:
            t3 = self.n_coeff(beta, neg_r) * self.n_coeff(k3, alpha)
        ngr = self.n_coeff(g, neg_r)
        num = -(t1 + t3)
        if num % ngr:
            raise JacobiFailure("special pair (%d,%d)" % (alpha, beta))
        return num // ngr

    def _expand_first(self, alpha: int, b: int) -> Tuple[int, ...]:
        """[e_alpha, basis_b] by expanding e_alpha via its defining pair."""
        if abs(self._ht(alpha)) == 1:
            # simple or negative simple versus a root of equal height:
            # the difference of two height-one roots is never a root, and
            # opposite pairs are handled earlier, so only the negated
            # defining relation can apply
            raise RuntimeError("unexpected height-one expansion %d" % alpha)
        if alpha <= 24:
            i, base, n = _defining_pairs()[alpha]
            x, y = i - 1, base - 1
        else:
            pos = alpha - 24
            i, base, n = _defining_pairs()[pos]
            x, y = i + 23, base + 23
            n = -n
        # e_alpha = (1/n)[e_x, e_y] hence
        # [e_alpha, v] = (1/n)([e_x, [e_y, v]] - [e_y, [e_x, v]])
        t1 = self.bracket(self._unit(x), self.bracket_basis(y, b))
        t2 = self.bracket(self._unit(y), self.bracket_basis(x, b))
        out = []
        for p, q in zip(t1, t2):
            num = p - q
            if num % n:
                raise JacobiFailure("non-integral expansion at %d" % alpha)
            out.append(num // n)
        return tuple(out)


@lru_cache(maxsize=1)
def chevalley() -> _Chevalley:
    ch = _Chevalley()
    # force the full table
    for a in range(DIM):
        for b in range(DIM):
            ch.bracket_basis(a, b)
    return ch


@lru_cache(maxsize=1)
def structure_constants() -> Dict[Tuple[int, int], int]:
    """N(alpha, beta) for root index pairs with alpha+beta a root."""
    ch = chevalley()
    rs = ch.rs
    out = {}
    for a in range(1, 49):
        for b in range(1, 49):
            k = rs.sum_table.get((a, b))
            if k is None:
                continue
            v = ch.bracket_basis(a - 1, b - 1)
            out[(a, b)] = v[k - 1]
    return out


def build_structure_constants():
    """Build and certify the structure constants (spec entry point)."""
    verify_chevalley()
    return chevalley()


@lru_cache(maxsize=1)
def verify_chevalley() -> bool:
    """Exhaustive antisymmetry, Jacobi and string-length certification."""
    ch = chevalley()
    rs = ch.rs
    N = structure_constants()
    for (a, b), n in N.items():
        if N[(b, a)] != -n:
            raise JacobiFailure("antisymmetry fails at %r" % ((a, b),))
        # |N| = p+1 with p the string length downwards
        p = 0
        cur = rs.coords[b]
        while True:
            nxt = tuple(x - y for x, y in zip(cur, rs.coords[a]))
            if nxt in rs.index_of:
                p += 1
                cur = nxt
            else:
                break
        if abs(n) != p + 1:
            raise JacobiFailure("string length fails at %r" % ((a, b),))
    # Jacobi on all basis triples
    table = [[ch.bracket_basis(a, b) for b in range(DIM)] for a in range(DIM)]

    def br(v, w):
        out = [0] * DIM
        for i, x in enumerate(v):
            if x:
                row = table[i]
                for j, y in enumerate(w):
                    if y:
                        bb = row[j]
                        c = x * y
                        for k, z in enumerate(bb):
                            if z:
                                out[k] += c * z
        return out

    units = [ch._unit(k) for k in range(DIM)]
    for a in range(DIM):
        for b in range(a + 1, DIM):
            ab = table[a][b]
            for c in range(b + 1, DIM):
                t1 = br(ab, units[c])
                t2 = br(table[b][c], units[a])
                t3 = br(table[c][a], units[b])
                if any(x + y + z for x, y, z in zip(t1, t2, t3)):
                    raise JacobiFailure("Jacobi fails at %r" % ((a, b, c),))
    return True


# ---------------------------------------------------------------------------
# adjoint matrices and the extended Weyl group


class ExtWeylElt:
    __slots__ = ("mat", "word", "_key")

    def __init__(self, mat: np.ndarray, word: Optional[str] = None):
        self.mat = mat
        self.word = word
        self._key = None

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = self.mat.astype(np.int8).tobytes()
        return self._key

    def __mul__(self, other: "ExtWeylElt") -> "ExtWeylElt":
        w = None
        if self.word is not None and other.word is not None:
            w = self.word + other.word
        return ExtWeylElt(self.mat @ other.mat, w)

    def inv(self) -> "ExtWeylElt":
        m = np.rint(np.linalg.inv(self.mat)).astype(np.int64)
        assert (m @ self.mat == np.eye(DIM, dtype=np.int64)).all()
        return ExtWeylElt(m)

    def __eq__(self, other):
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def project(self) -> weyl.WeylElt:
        """Image in W: the induced signed permutation of root spaces."""
        perm = []
        for j in range(48):
            col = self.mat[:48, j]
            nz = np.nonzero(col)[0]
            if len(nz) != 1 or abs(col[nz[0]]) != 1:
                raise ValueError("matrix does not permute root spaces")
            perm.append(int(nz[0]))
        return weyl.WeylElt(tuple(perm))

    def order(self) -> int:
        e = ext_identity()
        n, x = 1, self
        while x != e:
            x = x * self
            n += 1
        return n


@lru_cache(maxsize=1)
def ext_identity() -> ExtWeylElt:
    return ExtWeylElt(np.eye(DIM, dtype=np.int64), "")


@lru_cache(maxsize=None)
def ad_matrix(alpha: int) -> np.ndarray:
    """ad(e_alpha) in the adjoint representation."""
    ch = chevalley()
    m = np.zeros((DIM, DIM), dtype=np.int64)
    for b in range(DIM):
        col = ch.bracket_basis(alpha - 1, b)
        for k, v in enumerate(col):
            if v:
                m[k, b] = v
    return m


def x_root(alpha: int, t: int) -> ExtWeylElt:
    """exp(t ad e_alpha); integral for integral t (ad is nilpotent of
    degree <= 3 on the adjoint module, and ad^2/2 is integral)."""
    A = ad_matrix(alpha)
    m = np.eye(DIM, dtype=np.int64) + t * A
    A2 = A @ A
    assert (A2 % 2 == 0).all()
    m = m + (t * t) * (A2 // 2)
    A3 = A2 @ A
    if A3.any():
        assert (A3 % 6 == 0).all()
        m = m + (t ** 3) * (A3 // 6)
        assert not (A3 @ A).any()
    return ExtWeylElt(m)


@lru_cache(maxsize=None)
def n_root(alpha: int) -> ExtWeylElt:
    """n_alpha = x_alpha(1) x_{-alpha}(-1) x_alpha(1)."""
    rs = build_f4()
    na = rs.neg(alpha)
    m = (x_root(alpha, 1) * x_root(na, -1) * x_root(alpha, 1)).mat
    return ExtWeylElt(m, "n%d." % alpha)


@lru_cache(maxsize=None)
def h_minus_one(alpha: int) -> ExtWeylElt:
    """The torus element alpha^vee(-1): diagonal (-1)^{<beta, alpha^vee>} on
    e_beta, identity on the Cartan part."""
    rs = build_f4()
    d = np.ones(DIM, dtype=np.int64)
    for b in range(1, 49):
        n = rs.pairing(rs.coords[b], rs.coroot_coords[alpha])
        if n % 2:
            d[b - 1] = -1
    return ExtWeylElt(np.diag(d))


@lru_cache(maxsize=1)
def gamma_lift() -> ExtWeylElt:
    """The canonical lift of w_0: product of n_i over a reduced word."""
    word = weyl.reduced_word(weyl.longest_element())
    m = ext_identity()
    for i in word:
        m = m * n_root(i)
    return ExtWeylElt(m.mat, "g.")


def lift_word(word: Iterable) -> ExtWeylElt:
    """Lift a word over {('s', i), ('w0',)} by s_i -> n_i, w_0 -> gamma."""
    m = ext_identity()
    for tok in word:
        if tok == "w0":
            m = m * gamma_lift()
        else:
            m = m * n_root(int(tok))
    return ExtWeylElt(m.mat)


def gamma_conjugation_pattern() -> Dict[Tuple[int, int], int]:
    """For j = 1..4 and t in {1,-1,2}: the sign c with
    gamma x_{alpha_j}(t) gamma^{-1} = x_{-alpha_j}(c*t); raises if the
    conjugate is not a root element of -alpha_j at all."""
    g = gamma_lift()
    gi = g.inv()
    rs = build_f4()
    out = {}
    for j in range(1, 5):
        for t in (1, -1, 2):
            target = g.mat @ x_root(j, t).mat @ gi.mat
            for c in (-1, 1):
                if (target == x_root(rs.neg(j), c * t).mat).all():
                    out[(j, t)] = c
                    break
            else:
                raise GammaRelationFailure(
                    "gamma conjugate of x_%d(%d) is not a (-alpha_%d)-element"
                    % (j, t, j)
                )
    return out


@lru_cache(maxsize=1)
def enumerate_ext_weyl() -> Dict[bytes, np.ndarray]:
    """BFS closure of <n_1..n_4>: 18432 matrices keyed by int8 bytes."""
    gens = [n_root(i) for i in range(1, 5)]
    e = ext_identity()
    seen = {e.key: e.mat}
    frontier = [e.mat]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                x = m @ g.mat
                k = x.astype(np.int8).tobytes()
                if k not in seen:
                    seen[k] = x
                    new.append(x)
        frontier = new
    return seen


def ext_kernel() -> List[ExtWeylElt]:
    """Elements of the extended Weyl group projecting to 1 in W."""
    out = []
    for k, m in enumerate_ext_weyl().items():
        el = ExtWeylElt(m)
        if all(
            m[j, j] in (1, -1) and np.count_nonzero(m[:48, j]) == 1
            for j in range(48)
        ):
            if el.project() == weyl.identity():
                out.append(el)
    return out


def braid_check() -> bool:
    """Tits braid relations for the n_i."""
    rs = build_f4()
    for i in range(1, 5):
        for j in range(i + 1, 5):
            cij = rs.pair_root_coroot(i, j) * rs.pair_root_coroot(j, i)
            m = {0: 2, 1: 3, 2: 4, 3: 6}[cij]
            a, b = n_root(i), n_root(j)
            lhs = ext_identity()
            rhs = ext_identity()
            for k in range(m):
                lhs = lhs * (a if k % 2 == 0 else b)
                rhs = rhs * (b if k % 2 == 0 else a)
            if lhs != rhs:
                return False
    return True


def subsystem_ext_group(delta) -> List[ExtWeylElt]:
    """The finite subgroup generated by the n_delta for delta in a base of
    the closure of delta, together with all h(-1) elements of the subsystem."""
    rs = build_f4()
    closed = rs.closure(delta)
    base = rs.base_of(closed)
    gens = [n_root(d) for d in base]
    gens += [h_minus_one(i) for i in sorted(closed) if i <= 24]
    e = ext_identity()
    seen = {e.key: e}
    frontier = [e]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                x = m * g
                if x.key not in seen:
                    seen[x.key] = x
                    new.append(x)
        frontier = new
    return list(seen.values())
