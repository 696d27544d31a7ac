"""Exact word problem and structure queries for Coxeter systems.

The word problem engine is the minimal-root (small-root) reflection table:
the finitely many positive roots that dominate no other positive root,
together with the action of each simple reflection on them.  Tracking which
minimal roots a prefix sends negative gives an exact reducedness and
descent test, from which ShortLex normal forms are computed; no floating
point enters any decision (root coordinates live in a real cyclotomic
ring, and the one inequality in the table construction uses certified
sign determination).

Structure queries cover the spherical/affine/hyperbolic trichotomy of
triangle groups, maximal finite standard parabolic subgroups (by exact
positive-definiteness of the Gram matrix), and a brute-force center check
for the alternating subgroup of the finite triangle groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .cosets import CayleyTable, todd_coxeter
from .cyclo import Cyc, sign_real, two_cos_pi_over
from .presentations import coxeter_triangle
from .words import Alphabet, Word

INFINITY = None  # edge label for m(s,t) = infinity


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of braid labels; diagonal 1, off-diagonal >= 2 or None."""

    labels: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        for i, row in enumerate(self.labels):
            if len(row) != n:
                raise ValueError("matrix must be square")
            if row[i] != 1:
                raise ValueError("diagonal labels must be 1")
            for j, v in enumerate(row):
                if v != self.labels[j][i]:
                    raise ValueError("matrix must be symmetric")
                if i != j and v is not None and v < 2:
                    raise ValueError("off-diagonal labels must be >= 2 (or None)")

    @property
    def rank(self) -> int:
        return len(self.labels)

    @staticmethod
    def triangle(k: int, n: int, m: int) -> "CoxeterMatrix":
        """Rank-3 system with m(r1,r2) = k, m(r2,r3) = n, m(r3,r1) = m."""
        if min(k, n, m) < 2:
            raise ValueError("triangle labels must be >= 2")
        return CoxeterMatrix(((1, k, m), (k, 1, n), (m, n, 1)))

    def alphabet(self) -> Alphabet:
        return Alphabet([f"r{i + 1}" for i in range(self.rank)])

    def modulus(self) -> int:
        finite = [v for row in self.labels for v in row if v is not None]
        return lcm(*(2 * v for v in finite))

    def gram(self) -> list[list[Cyc]]:
        """B(a_s, a_t) = -cos(pi / m(s,t)), with -1 for label infinity."""
        n = self.rank
        out: list[list[Cyc]] = []
        for i in range(n):
            row = []
            for j in range(n):
                v = self.labels[i][j]
                if i == j:
                    row.append(Cyc.rational(1))
                elif v is None:
                    row.append(Cyc.rational(-1))
                else:
                    row.append(-two_cos_pi_over(v) / 2)
            out.append(row)
        return out


_NEGATIVE = -1
_ELEVATED = -2


class MinimalRootTable:
    """Minimal roots of a Coxeter system with the simple-reflection action.

    ``action[r][s]`` is the index of s(root r), or ``_NEGATIVE`` when
    root r is the s-th simple root (sent negative), or ``_ELEVATED`` when
    the image dominates a simple root and leaves the minimal set.
    """

    def __init__(self, cm: CoxeterMatrix):
        self.cm = cm
        self.rank = cm.rank
        # one fixed modulus for every coordinate, so equal values always
        # have identical canonical forms (roots are dictionary keys)
        modulus = cm.modulus()
        gram = [[entry.embed(modulus) for entry in row] for row in cm.gram()]
        one = Cyc.rational(1).embed(modulus)
        zero = Cyc.rational(0).embed(modulus)

        def reflect(coords: tuple[Cyc, ...], s: int, b_val: Cyc) -> tuple[Cyc, ...]:
            out = list(coords)
            out[s] = out[s] - 2 * b_val
            return tuple(out)

        def bform(coords: tuple[Cyc, ...], s: int) -> Cyc:
            total = zero
            for t, c in enumerate(coords):
                if not c.is_zero():
                    total = total + c * gram[s][t]
            return total

        simples = []
        for s in range(self.rank):
            v = [zero] * self.rank
            v[s] = one
            simples.append(tuple(v))
        self.roots: list[tuple[Cyc, ...]] = list(simples)
        index = {r: i for i, r in enumerate(simples)}
        self.action: list[list[int]] = []
        r = 0
        while r < len(self.roots):
            coords = self.roots[r]
            row = []
            for s in range(self.rank):
                if coords == simples[s]:
                    row.append(_NEGATIVE)
                    continue
                b = bform(coords, s)
                sgn_b = sign_real(b)
                if sgn_b == 0:
                    row.append(r)
                    continue
                if sgn_b < 0 and sign_real(b + one) <= 0:
                    # image dominates the simple root of s: not minimal
                    row.append(_ELEVATED)
                    continue
                if sgn_b > 0 and sign_real(b - one) >= 0:
                    raise AssertionError("minimal root with inner product >= 1")
                img = reflect(coords, s, b)
                if img not in index:
                    index[img] = len(self.roots)
                    self.roots.append(img)
                row.append(index[img])
            self.action.append(row)
            r += 1

    def __len__(self) -> int:
        return len(self.roots)

    # -- the word problem -----------------------------------------------------

    def _letters(self, w: Word) -> list[int]:
        # generators are involutions; inverse letters act identically
        return [abs(x) - 1 for x in w.letters]

    def _state_scan(self, letters: list[int]) -> dict[int, int]:
        """State of a reduced word: minimal roots sent negative, with the
        index of the creating letter."""
        state: dict[int, int] = {}
        for idx, s in enumerate(letters):
            new_state: dict[int, int] = {}
            for root, born in state.items():
                img = self.action[root][s]
                if img >= 0:
                    new_state[img] = born
                # _ELEVATED roots leave the minimal set; _NEGATIVE cannot
                # occur because the simple root of s is handled below
            new_state[s] = idx
            state = new_state
        return state

    def reduce_word(self, w: Word) -> list[int]:
        """A reduced word (letter list) for the element of w."""
        word: list[int] = []
        state: dict[int, int] = {}
        for s in self._letters(w):
            if s in state:  # descent: delete the letter that created a_s
                del word[state[s]]
                state = self._state_scan(word)
            else:
                new_state: dict[int, int] = {}
                for root, born in state.items():
                    img = self.action[root][s]
                    if img >= 0:
                        new_state[img] = born
                new_state[s] = len(word)
                word.append(s)
                state = new_state
        return word

    def length(self, w: Word) -> int:
        return len(self.reduce_word(w))

    def nf(self, w: Word) -> Word:
        """ShortLex-minimal normal form (r1 < r2 < ...)."""
        reduced = self.reduce_word(w)
        out: list[int] = []
        v_inv = reduced[::-1]
        while v_inv:
            state = self._state_scan(v_inv)
            s = min(state)  # smallest left descent of the element
            out.append(s)
            del v_inv[state[s]]
        ab = self.cm.alphabet()
        return Word(ab, tuple(s + 1 for s in out))

    def is_identity(self, w: Word) -> bool:
        return not self.reduce_word(w)


def minimal_root_table(cm: CoxeterMatrix) -> MinimalRootTable:
    return MinimalRootTable(cm)


def nf(table: MinimalRootTable, w: Word) -> Word:
    return table.nf(w)


def parity(w: Word) -> str:
    """Length parity; well defined since all defining relators have even length."""
    return "even" if len(w.letters) % 2 == 0 else "odd"


def classify_triangle(k: int, n: int, m: int) -> str:
    """spherical, affine, or hyperbolic by the curvature of 1/k + 1/n + 1/m."""
    if min(k, n, m) < 2:
        raise ValueError("labels must be >= 2")
    s = Fraction(1, k) + Fraction(1, n) + Fraction(1, m)
    if s > 1:
        return "spherical"
    if s == 1:
        return "affine"
    return "hyperbolic"


@dataclass(frozen=True)
class ParabolicReport:
    verdicts: tuple[tuple[tuple[int, ...], bool], ...]  # subset -> finite?
    maximal_finite: tuple[tuple[int, ...], ...]
    rotation_orders: tuple[tuple[tuple[int, ...], int], ...]  # rank-2 members of M_W

    def maximal_sets(self) -> list[tuple[int, ...]]:
        return list(self.maximal_finite)

    def orders_multiset(self) -> list[int]:
        return sorted(v for _, v in self.rotation_orders)


def _is_positive_definite(gram: list[list[Cyc]], subset: tuple[int, ...]) -> bool:
    """Sylvester criterion with exact determinant signs."""
    k = len(subset)
    for t in range(1, k + 1):
        idx = subset[:t]
        det = _det([[gram[i][j] for j in idx] for i in idx])
        if sign_real(det) <= 0:
            return False
    return True


def _det(mat: list[list[Cyc]]) -> Cyc:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    total = Cyc.rational(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = mat[0][j] * _det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def maximal_finite_parabolics(cm: CoxeterMatrix) -> ParabolicReport:
    """Finiteness verdict per standard parabolic, and the maximal finite ones.

    W_J is finite exactly when the Gram matrix restricted to J is positive
    definite.  For an infinite rank-3 triangle the maximal finite subsets
    are the three pairs, whose rotation subgroups are cyclic of the three
    edge orders.
    """
    gram = cm.gram()
    n = cm.rank
    verdicts: list[tuple[tuple[int, ...], bool]] = []
    finite: dict[tuple[int, ...], bool] = {}
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            if any(cm.labels[i][j] is None for i in subset for j in subset if i < j):
                ok = False
            else:
                ok = _is_positive_definite(gram, subset)
            finite[subset] = ok
            verdicts.append((subset, ok))
    maximal = [
        subset
        for subset, ok in verdicts
        if ok
        and all(
            not finite[bigger]
            for bigger in finite
            if len(bigger) == len(subset) + 1 and set(subset) <= set(bigger)
        )
    ]
    rotation = [
        (subset, cm.labels[subset[0]][subset[1]])
        for subset in maximal
        if len(subset) == 2 and cm.labels[subset[0]][subset[1]] is not None
    ]
    return ParabolicReport(tuple(verdicts), tuple(maximal), tuple(rotation))


@dataclass(frozen=True)
class CenterReport:
    group_order: int
    plus_order: int
    z_w_order: int
    z_w_plus_order: int
    contained: bool
    z_w_lengths: tuple[int, ...]  # generator-lengths of the elements of Z(W)


def center_check_plus(cm: CoxeterMatrix, max_cosets: int = 10**6) -> CenterReport:
    """Brute-force check that Z(W+) is contained in Z(W), for finite W.

    Raises ValueError for infinite systems; containment in the infinite
    irreducible case is a theorem, not an exhaustible computation.
    """
    if cm.rank != 3:
        raise ValueError("center check implemented for rank-3 triangles")
    k = cm.labels[0][1]
    n = cm.labels[1][2]
    m = cm.labels[2][0]
    if None in (k, n, m) or classify_triangle(k, n, m) != "spherical":
        raise ValueError("center check requires a finite (spherical) system")
    table = todd_coxeter(coxeter_triangle(k, n, m), max_cosets=max_cosets)
    cayley = CayleyTable(table)
    center = set(cayley.center())
    plus = [e for e in range(cayley.size) if cayley.length(e) % 2 == 0]
    plus_set = set(plus)
    z_plus = []
    for e in plus:
        if all(cayley.mul(e, f) == cayley.mul(f, e) for f in plus):
            z_plus.append(e)
    contained = all(e in center for e in z_plus)
    return CenterReport(
        group_order=cayley.size,
        plus_order=len(plus),
        z_w_order=len(center),
        z_w_plus_order=len(z_plus),
        contained=contained,
        z_w_lengths=tuple(sorted(cayley.length(e) for e in center)),
    )
