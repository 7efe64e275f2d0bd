"""The Weyl group W(F4) as exact integer matrices / root permutations.

Elements are canonicalized as permutations of the 48 root indices (0-based
internally), with the 4x4 matrix on X cached on demand.  Conjugacy classes
are numbered 1..25 to match the maximal-torus table; the numbering is pinned
by explicit long/short discriminators on the seven dagger-swapped pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from . import qpoly
from .rootsys import build_f4

Perm = Tuple[int, ...]


class ClassMatchAmbiguous(RuntimeError):
    pass


class NoTwistFound(RuntimeError):
    pass


def root_system():
    return build_f4()


class WeylElt:
    __slots__ = ("perm", "_mat")

    def __init__(self, perm: Perm, mat=None):
        self.perm = perm
        self._mat = mat

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        # (self*other)(alpha) = self(other(alpha)); matches matrix product
        p, q = self.perm, other.perm
        return WeylElt(tuple(p[q[i]] for i in range(48)))

    def inv(self) -> "WeylElt":
        p = self.perm
        out = [0] * 48
        for i, j in enumerate(p):
            out[j] = i
        return WeylElt(tuple(out))

    def __pow__(self, n: int) -> "WeylElt":
        if n < 0:
            return self.inv() ** (-n)
        r = identity()
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, other):
        return self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return "WeylElt%r" % (self.order(),)

    @property
    def mat(self):
        """Matrix on X in the alpha-basis: columns are images of alpha_1..4."""
        if self._mat is None:
            rs = build_f4()
            cols = [rs.coords[self.perm[j] + 1] for j in range(4)]
            self._mat = tuple(
                tuple(cols[j][i] for j in range(4)) for i in range(4)
            )
        return self._mat

    def order(self) -> int:
        n, x = 1, self
        e = identity()
        while x != e:
            x = x * self
            n += 1
        return n

    def acts_on(self, i: int) -> int:
        """Image of root index i (1-based)."""
        return self.perm[i - 1] + 1


@lru_cache(maxsize=1)
def identity() -> WeylElt:
    return WeylElt(tuple(range(48)))


@lru_cache(maxsize=None)
def simple_reflection(i: int) -> WeylElt:
    rs = build_f4()
    return WeylElt(rs.reflection_perm(i))


def reflection(alpha: int) -> WeylElt:
    return simple_reflection(alpha)


@lru_cache(maxsize=1)
def generate_w() -> Tuple[WeylElt, ...]:
    """All 1152 elements, breadth-first over s_1..s_4."""
    gens = [simple_reflection(i) for i in range(1, 5)]
    seen = {identity().perm: identity()}
    frontier = [identity()]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                x = w * g
                if x.perm not in seen:
                    seen[x.perm] = x
                    new.append(x)
        frontier = new
    return tuple(sorted(seen.values(), key=lambda w: w.perm))


@lru_cache(maxsize=1)
def longest_element() -> WeylElt:
    for w in generate_w():
        if all(v == -1 or v == 0 for row in w.mat for v in row) and w.mat == tuple(
            tuple(-(i == j) for j in range(4)) for i in range(4)
        ):
            return w
    raise RuntimeError("w0 not found")


def reduced_word(w: WeylElt) -> List[int]:
    """A reduced word for w (indices 1..4), by the descent algorithm."""
    rs = build_f4()
    word: List[int] = []
    x = w
    e = identity()
    while x != e:
        for i in range(1, 5):
            if x.acts_on(i) > 24:  # x(alpha_i) < 0
                word.append(i)
                x = x * simple_reflection(i)
                break
        else:
            raise RuntimeError("no descent found")
    word.reverse()
    return word


def dagger_perm() -> Perm:
    rs = build_f4()
    return tuple(rs.dagger[i + 1] - 1 for i in range(48))


def dagger_w(w: WeylElt) -> WeylElt:
    """The duality automorphism: s_alpha -> s_{alpha^dagger}."""
    d = dagger_perm()
    return WeylElt(tuple(d[w.perm[d[i]]] for i in range(48)))


# ---------------------------------------------------------------------------
# conjugacy classes, numbered per the maximal-torus table

# Carter names, stored as data (row i+1 of the torus table).
CLASS_NAMES = (
    "A0", "4A1", "2A1", "A2", "D4", "D4(a1)", "~A2", "C3+A1", "A2+~A2",
    "F4(a1)", "F4", "A1", "3A1", "~A2+A1", "C3", "A3", "~A1", "2A1+~A1",
    "A2+~A1", "B3", "B2+A1", "A1+~A1", "B2", "A3+~A1", "B4",
)


@dataclass
class ConjClassInfo:
    class_no: int
    elt_order: int
    centralizer_order: int
    p2: int
    p3: int
    dagger_image: int
    name: str
    charpoly_cyc: Tuple[int, ...]


def charpoly_cyclotomic(w: WeylElt) -> Tuple[int, ...]:
    """Sorted cyclotomic indices of the characteristic polynomial of w."""
    fac = qpoly.factor_cyclotomic(qpoly.charpoly_int(w.mat))
    if fac.q_power:
        raise qpoly.NonCyclotomicFactor("charpoly has a q factor")
    out: List[int] = []
    for d, m in fac.factors:
        out.extend([d] * m)
    return tuple(sorted(out))


def _negated_counts(w: WeylElt) -> Tuple[int, int]:
    """(long, short) counts of roots alpha with w(alpha) = -alpha."""
    rs = build_f4()
    nl = ns = 0
    for i in range(1, 49):
        if w.acts_on(i) == rs.neg(i):
            if rs.roots[i - 1].is_long:
                nl += 1
            else:
                ns += 1
    return nl, ns


def _moved_plane_long_count(w: WeylElt) -> int:
    """Number of long roots inside im(w - 1), for order-3 elements."""
    rs = build_f4()
    M = w.mat
    cols = []
    for j in range(4):
        col = [M[i][j] - (i == j) for i in range(4)]
        if any(col):
            cols.append(col)
    base = [c for c in cols]
    cnt = 0
    for i in range(1, 49):
        v = list(rs.coords[i])
        if qpoly.rank_frac(base + [v]) == qpoly.rank_frac(base):
            if rs.roots[i - 1].is_long:
                cnt += 1
    return cnt


@lru_cache(maxsize=1)
def _class_partition():
    """Conjugacy classes as frozensets, plus per-element class lookup."""
    W = generate_w()
    gens = [simple_reflection(i) for i in range(1, 5)]
    unassigned = {w.perm: w for w in W}
    classes: List[FrozenSet[Perm]] = []
    while unassigned:
        seed = unassigned[next(iter(unassigned))]
        orbit = {seed.perm}
        frontier = [seed]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = g.inv() * x * g
                    if y.perm not in orbit:
                        orbit.add(y.perm)
                        new.append(y)
            frontier = new
        for p in orbit:
            unassigned.pop(p, None)
        classes.append(frozenset(orbit))
    return classes


@lru_cache(maxsize=1)
def _numbered_classes() -> Tuple[Tuple[FrozenSet[Perm], ConjClassInfo], ...]:
    classes = _class_partition()
    reps = [WeylElt(next(iter(c))) for c in classes]
    keys = []
    for c, rep in zip(classes, reps):
        keys.append((rep.order(), 1152 // len(c), charpoly_cyclotomic(rep)))

    def disambiguate(idx: int) -> int:
        rep = reps[idx]
        order, cent, cp = keys[idx]
        if (order, cent) == (2, 96) and cp == (1, 1, 1, 2):
            nl, _ = _negated_counts(rep)
            return 12 if nl == 2 else 17
        if (order, cent) == (2, 96) and cp == (1, 2, 2, 2):
            nl, _ = _negated_counts(rep)
            return 13 if nl == 6 else 18
        if (order, cent) == (4, 16):
            nl, ns = _negated_counts(rep)
            return 16 if ns == 2 else 21
        if (order, cent) == (3, 36):
            return 4 if _moved_plane_long_count(rep) == 6 else 7
        if (order, cent) == (6, 36):
            sq = _class_index_of(rep * rep)
            return 5 if sq == 4 else 8
        if (order, cent) == (6, 12) and cp == (1, 2, 3):
            sq = _class_index_of(rep * rep)
            return 14 if sq == 7 else 19
        if (order, cent) == (6, 12) and cp == (1, 2, 6):
            sq = _class_index_of(rep * rep)
            return 15 if sq == 7 else 20
        raise ClassMatchAmbiguous(str(keys[idx]))

    unique_keys: Dict[tuple, int] = {}
    for k in keys:
        unique_keys[k] = unique_keys.get(k, 0) + 1

    base_for_key = {
        (1, 1152, (1, 1, 1, 1)): 1,
        (2, 1152, (2, 2, 2, 2)): 2,
        (2, 64, (1, 1, 2, 2)): 3,
        (4, 96, (4, 4)): 6,
        (3, 72, (3, 3)): 9,
        (6, 72, (6, 6)): 10,
        (12, 12, (12,)): 11,
        (2, 16, (1, 1, 2, 2)): 22,
        (4, 32, (1, 1, 4)): 23,
        (4, 32, (2, 2, 4)): 24,
        (8, 8, (8,)): 25,
    }

    # two-pass: first the unambiguous and involution/order-3/4 pins, then the
    # order-6 classes which refer to squares
    numbers: List[Optional[int]] = [None] * len(classes)
    global _SQUARE_LOOKUP
    for i, k in enumerate(keys):
        if unique_keys[k] == 1:
            numbers[i] = base_for_key[k]
    pending = [i for i in range(len(classes)) if numbers[i] is None]
    # order matters: square-based pins need the order-3 pair first
    pending.sort(key=lambda i: keys[i][0])
    for i in pending:
        numbers[i] = disambiguate(i)
    if sorted(numbers) != list(range(1, 26)):
        raise ClassMatchAmbiguous("class numbering failed: %r" % numbers)

    by_no = {}
    for i, c in enumerate(classes):
        by_no[numbers[i]] = (c, reps[i], keys[i])
    infos = []
    for no in range(1, 26):
        c, rep, (order, cent, cp) = by_no[no]
        infos.append((c, rep, no, order, cent, cp))
    return tuple(infos)  # finalized in conjugacy_classes()


_square_cache: Dict[Perm, int] = {}


def _class_index_of(w: WeylElt) -> int:
    """Provisional class number during the numbering bootstrap: only valid
    for classes that are unambiguous or already order<6-pinned."""
    order = w.order()
    cp = charpoly_cyclotomic(w)
    cent = centralizer_order(w)
    if (order, cent) == (3, 36):
        return 4 if _moved_plane_long_count(w) == 6 else 7
    key = (order, cent, cp)
    table = {
        (1, 1152, (1, 1, 1, 1)): 1,
        (2, 1152, (2, 2, 2, 2)): 2,
        (2, 64, (1, 1, 2, 2)): 3,
        (2, 16, (1, 1, 2, 2)): 22,
    }
    if key in table:
        return table[key]
    raise ClassMatchAmbiguous("square landed in unexpected class %r" % (key,))


@lru_cache(maxsize=1)
def _perm_to_class() -> Dict[Perm, int]:
    out = {}
    for c, rep, no, *_ in _numbered_classes():
        for p in c:
            out[p] = no
    return out


def identify_class(w: WeylElt) -> int:
    return _perm_to_class()[w.perm]


def class_rep(no: int) -> WeylElt:
    for c, rep, n, *_ in _numbered_classes():
        if n == no:
            return rep
    raise KeyError(no)


def class_elements(no: int) -> List[WeylElt]:
    for c, rep, n, *_ in _numbered_classes():
        if n == no:
            return [WeylElt(p) for p in c]
    raise KeyError(no)


def centralizer(w: WeylElt) -> List[WeylElt]:
    return [x for x in generate_w() if x * w == w * x]


def centralizer_order(w: WeylElt) -> int:
    return sum(1 for x in generate_w() if x * w == w * x)


def power_map(c: int, k: int) -> int:
    return identify_class(class_rep(c) ** k)


def dagger_class(c: int) -> int:
    return identify_class(dagger_w(class_rep(c)))


@lru_cache(maxsize=1)
def conjugacy_classes() -> Tuple[Tuple[ConjClassInfo, WeylElt], ...]:
    """The 25 classes with their torus-table invariants, in table order."""
    out = []
    for c, rep, no, order, cent, cp in _numbered_classes():
        info = ConjClassInfo(
            class_no=no,
            elt_order=order,
            centralizer_order=cent,
            p2=power_map(no, 2),
            p3=power_map(no, 3),
            dagger_image=dagger_class(no),
            name=CLASS_NAMES[no - 1],
            charpoly_cyc=cp,
        )
        out.append((info, rep))
    return tuple(out)


# ---------------------------------------------------------------------------
# subgroups


def subgroup_closure(gens: Iterable[WeylElt]) -> List[WeylElt]:
    gens = list(gens)
    seen = {identity().perm}
    frontier = [identity()]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                x = w * g
                if x.perm not in seen:
                    seen.add(x.perm)
                    new.append(x)
        frontier = new
    return [WeylElt(p) for p in sorted(seen)]


@lru_cache(maxsize=None)
def reflection_subgroup(gamma: FrozenSet[int]) -> Tuple[WeylElt, ...]:
    """W_Gamma = <s_alpha : alpha in gamma> as an enumerated subgroup."""
    return tuple(subgroup_closure(simple_reflection(a) for a in gamma))


def reflection_subgroup_of(gamma) -> Tuple[WeylElt, ...]:
    return reflection_subgroup(frozenset(gamma))


def stab_setwise(gamma) -> List[WeylElt]:
    """Setwise stabilizer of a set of root indices (1-based)."""
    target = frozenset(i - 1 for i in gamma)
    return [
        w
        for w in generate_w()
        if frozenset(w.perm[i] for i in target) == target
    ]


def normalizes(v: WeylElt, closed) -> bool:
    idx = frozenset(i - 1 for i in closed)
    return frozenset(v.perm[i] for i in idx) == idx


def longest_in(base) -> WeylElt:
    """Longest element of the reflection subgroup with the given base:
    the unique element sending every positive root of the subsystem to a
    negative one."""
    rs = build_f4()
    closed = rs.closure(base)
    pos = [i for i in sorted(closed) if i <= 24]
    sub = reflection_subgroup(frozenset(closed))
    best = None
    for w in sub:
        if all(w.acts_on(i) > 24 for i in pos):
            if best is not None:
                raise RuntimeError("longest element not unique")
            best = w
    if best is None:
        raise RuntimeError("no longest element found")
    return best


def torus_structure(w: WeylElt, q: int) -> List[int]:
    """Abelian invariants of Y/(q*w - 1)Y via Smith normal form."""
    M = w.mat
    qm = [[q * M[i][j] - (i == j) for j in range(4)] for i in range(4)]
    return qpoly.abelian_invariants(qm)


# ---------------------------------------------------------------------------
# orbit counts of the graph/field twist on IBr of the principal block


def _conj_classes_of(sub: Tuple[WeylElt, ...]) -> List[FrozenSet[Perm]]:
    elems = {w.perm: w for w in sub}
    out = []
    unassigned = dict(elems)
    while unassigned:
        seed = unassigned[next(iter(unassigned))]
        orbit = {(g.inv() * seed * g).perm for g in sub}
        for p in orbit:
            unassigned.pop(p, None)
        out.append(frozenset(orbit))
    return out


def sigma_orbit_count(e: int) -> int:
    """Number of length-two orbits of the long/short graph twist on the
    conjugacy classes of C_W(w), for the e-twisted Sylow normalizer."""
    if e in (1, 2):
        return sum(1 for c in range(1, 26) if dagger_class(c) > c)
    if e == 4:
        cls, n = 6, None
    elif e == 3:
        cls, n = 9, "search"
    elif e == 6:
        cls, n = 10, "search"
    else:
        raise ValueError("e must be one of 1,2,3,4,6")
    w = None
    if e == 4:
        for cand in class_elements(cls):
            if dagger_w(cand) == cand:
                w = cand
                break
        if w is None:
            raise NoTwistFound("no dagger-stable element in class %d" % cls)
        twist = dagger_w
    else:
        found = None
        for cand in class_elements(cls):
            wd = dagger_w(cand)
            for n_ in generate_w():
                if n_.inv() * wd * n_ == cand:
                    found = (cand, n_)
                    break
            if found:
                break
        if found is None:
            raise NoTwistFound("class %d has no twisted stabilizer" % cls)
        w, n_ = found

        def twist(x, n_=n_):
            return n_.inv() * dagger_w(x) * n_

    cent = tuple(centralizer(w))
    classes = _conj_classes_of(cent)
    moved = 0
    seen = set()
    for i, c in enumerate(classes):
        if i in seen:
            continue
        rep = WeylElt(next(iter(c)))
        img = twist(rep).perm
        j = next(k for k, ck in enumerate(classes) if img in ck)
        if j != i:
            seen.add(j)
            moved += 1
        seen.add(i)
    return moved
