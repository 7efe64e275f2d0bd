"""Exact model of the F4 root datum.

All 48 roots are expressed by their integer coordinates in the base
alpha_1..alpha_4 (alpha_1, alpha_2 long; alpha_3, alpha_4 short, with the
double bond alpha_2 => alpha_3).  Roots are addressed everywhere by their
index 1..48; indices 1..24 are the positive roots in the standard (CHEVIE)
numbering, and 24+i is the negative of i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

Vec4 = Tuple[int, int, int, int]

# Positive roots: index -> (coordinates in alpha_1..alpha_4, dagger image).
# The dagger column is the duality permutation alpha -> alpha^dagger induced
# by delta(alpha_i) = alpha_{5-i}^vee.
_POSITIVE = {
    1: ((1, 0, 0, 0), 4),
    2: ((0, 1, 0, 0), 3),
    3: ((0, 0, 1, 0), 2),
    4: ((0, 0, 0, 1), 1),
    5: ((1, 1, 0, 0), 7),
    6: ((0, 1, 1, 0), 9),
    7: ((0, 0, 1, 1), 5),
    8: ((1, 1, 1, 0), 16),
    9: ((0, 1, 2, 0), 6),
    10: ((0, 1, 1, 1), 11),
    11: ((1, 1, 2, 0), 10),
    12: ((1, 1, 1, 1), 18),
    13: ((0, 1, 2, 1), 14),
    14: ((1, 2, 2, 0), 13),
    15: ((1, 1, 2, 1), 20),
    16: ((0, 1, 2, 2), 8),
    17: ((1, 2, 2, 1), 22),
    18: ((1, 1, 2, 2), 12),
    19: ((1, 2, 3, 1), 23),
    20: ((1, 2, 2, 2), 15),
    21: ((1, 2, 3, 2), 24),
    22: ((1, 2, 4, 2), 17),
    23: ((1, 3, 4, 2), 19),
    24: ((2, 3, 4, 2), 21),
}

# Symmetrized inner product on X in the alpha-basis.  Normalization: long
# roots have squared norm 2, short ones squared norm 1.  Forced by the Dynkin
# diagram 1 - 2 => 3 - 4 (values doubled to stay integral).
_B2 = (
    (4, -2, 0, 0),
    (-2, 4, -2, 0),
    (0, -2, 2, -1),
    (0, 0, -1, 2),
)


def _dot2(x: Sequence[int], y: Sequence[int]) -> int:
    """Twice the inner product of two X-vectors in the alpha-basis."""
    return sum(x[i] * _B2[i][j] * y[j] for i in range(4) for j in range(4))


@dataclass(frozen=True)
class Root:
    index: int
    coords: Vec4
    is_long: bool


class RootSystemF4:
    """The 48 roots, coroots, pairing, dagger involution and sum table."""

    def __init__(self):
        coords: Dict[int, Vec4] = {}
        for i, (c, _) in _POSITIVE.items():
            coords[i] = c
            coords[24 + i] = tuple(-x for x in c)
        self.coords = coords
        self.index_of: Dict[Vec4, int] = {c: i for i, c in coords.items()}
        self.roots: List[Root] = [
            Root(i, coords[i], _dot2(coords[i], coords[i]) == 4)
            for i in range(1, 49)
        ]
        # Cartan pairing matrix C[i][j] = <alpha_i, alpha_j^vee>.
        self.cartan = tuple(
            tuple(
                2 * _dot2(coords[i + 1], coords[j + 1])
                // _dot2(coords[j + 1], coords[j + 1])
                for j in range(4)
            )
            for i in range(4)
        )
        # Coroot coordinates: alpha^vee = 2*alpha/(alpha,alpha) written in the
        # base alpha_1^vee..alpha_4^vee; entry i is a_i*(alpha_i,alpha_i)/(alpha,alpha).
        self.coroot_coords: Dict[int, Vec4] = {}
        for i in range(1, 49):
            c = coords[i]
            nn = _dot2(c, c)
            cv = []
            for j in range(4):
                num = c[j] * _dot2(coords[j + 1], coords[j + 1])
                if num % nn:
                    raise ArithmeticError("non-integral coroot coordinate")
                cv.append(num // nn)
            self.coroot_coords[i] = tuple(cv)
        dag = {}
        for i, (_, d) in _POSITIVE.items():
            dag[i] = d
            dag[24 + i] = 24 + d
        self.dagger: Dict[int, int] = dag
        self.sum_table: Dict[Tuple[int, int], int] = {}
        for i in range(1, 49):
            for j in range(1, 49):
                s = tuple(a + b for a, b in zip(coords[i], coords[j]))
                if s in self.index_of:
                    self.sum_table[(i, j)] = self.index_of[s]

    def pairing(self, chi: Sequence, gamma: Sequence) -> int:
        """<chi, gamma> for chi in the alpha-basis of X, gamma in the
        alpha^vee-basis of Y.  Accepts Fractions for torus-element use."""
        val = sum(
            chi[i] * self.cartan[i][j] * gamma[j]
            for i in range(4)
            for j in range(4)
        )
        if isinstance(val, Fraction) and val.denominator == 1:
            return int(val)
        return val

    def pair_root_coroot(self, i: int, j: int) -> int:
        """<alpha_i, alpha_j^vee> for root indices i, j."""
        return self.pairing(self.coords[i], self.coroot_coords[j])

    def neg(self, i: int) -> int:
        return i + 24 if i <= 24 else i - 24

    def dagger_root(self, i: int) -> int:
        return self.dagger[i]

    def reflect(self, alpha: int, beta: int) -> int:
        """Index of s_alpha(beta) = beta - <beta, alpha^vee> alpha."""
        n = self.pair_root_coroot(beta, alpha)
        c = tuple(
            b - n * a for a, b in zip(self.coords[alpha], self.coords[beta])
        )
        return self.index_of[c]

    def reflection_perm(self, alpha: int) -> Tuple[int, ...]:
        """s_alpha as a permutation of 0..47 (root index minus one)."""
        return tuple(self.reflect(alpha, beta) - 1 for beta in range(1, 49))

    def closure(self, gamma) -> FrozenSet[int]:
        """Smallest subsystem of Sigma containing gamma: close the
        +/- symmetrized set under root addition."""
        cur = set()
        for i in gamma:
            cur.add(i)
            cur.add(self.neg(i))
        changed = True
        while changed:
            changed = False
            items = sorted(cur)
            for a in items:
                for b in items:
                    k = self.sum_table.get((a, b))
                    if k is not None and k not in cur:
                        cur.add(k)
                        changed = True
        return frozenset(cur)

    def base_of(self, closed: FrozenSet[int]) -> List[int]:
        """A base of a closed symmetric subset: indecomposable positives."""
        pos = sorted(i for i in closed if i <= 24)
        posset = set(pos)
        base = []
        for g in pos:
            decomposable = any(
                self.sum_table.get((a, b)) == g for a in pos for b in pos
            )
            if not decomposable:
                base.append(g)
        # sanity: base generates the positives by successive addition
        if posset and not base:
            raise ValueError("empty base for nonempty closed set")
        return base

    def cartan_type(self, closed: FrozenSet[int]):
        """Multiset of decorated irreducible types of a closed subsystem.

        Returns a sorted tuple of labels from {A1, ~A1, A2, ~A2, C2, B3, C3,
        A3, ~A3, B4, D4, ~D4, F4}; the tilde marks components consisting of
        short roots.
        """
        if closed != self.closure(closed):
            raise NotClosed("input is not closed")
        if not closed:
            return ()
        base = self.base_of(closed)
        # split base into connected components of the Coxeter graph
        n = len(base)
        adj = {
            i: {
                j
                for j in range(n)
                if j != i
                and self.pair_root_coroot(base[i], base[j]) != 0
            }
            for i in range(n)
        }
        seen, comps = set(), []
        for i in range(n):
            if i in seen:
                continue
            comp, stack = [], [i]
            seen.add(i)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x] - seen:
                    seen.add(y)
                    stack.append(y)
            comps.append(sorted(comp))
        labels = []
        for comp in comps:
            roots = [base[i] for i in comp]
            labels.append(self._component_type(roots, closed))
        return tuple(sorted(labels))

    def _component_type(self, base_roots: List[int], closed) -> str:
        rank = len(base_roots)
        longs = [r for r in base_roots if self.roots[r - 1].is_long]
        shorts = [r for r in base_roots if not self.roots[r - 1].is_long]
        nlong, nshort = len(longs), len(shorts)
        if nlong and nshort:
            if rank == 2:
                return "C2"  # = B2; single F4 conjugacy type
            # distinguish B_n (one short base root) from C_n (one long)
            if rank == 3:
                return "B3" if nshort == 1 else "C3"
            if rank == 4:
                if nshort == 2 and nlong == 2:
                    return "F4"
                return "B4" if nshort == 1 else "C4"
            raise UnknownCartanType(str(base_roots))
        tilde = "~" if nshort else ""
        # simply-laced component: identify by rank and node degrees
        if rank == 1:
            return tilde + "A1"
        degs = sorted(
            sum(
                1
                for b in base_roots
                if b != a and self.pair_root_coroot(a, b) != 0
            )
            for a in base_roots
        )
        if max(degs) <= 2:
            return tilde + "A%d" % rank
        if rank == 4 and degs == [1, 1, 1, 3]:
            return tilde + "D4"
        raise UnknownCartanType(str(base_roots))


class NotClosed(ValueError):
    pass


class UnknownCartanType(ValueError):
    pass


@lru_cache(maxsize=1)
def build_f4() -> RootSystemF4:
    return RootSystemF4()
