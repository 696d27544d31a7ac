"""Garside normal forms and a decidable word problem for torus knot groups.

On the standard presentation <x, y | x^n = y^m> the positive words form a
Garside monoid whose element Delta = x^n = y^m is central; the simple
elements are the powers x^i (i <= n) and y^j (j <= m) with x^n and y^m
identified as Delta.  Divisibility between simples from the two families
passes only through 1 and Delta, so the left-greedy normal form of a
positive word is just its sequence of alternating maximal blocks, with
every full power x^n or y^m extracted as a leading Delta.

Words with inverses are handled by Delta-padding: each inverse letter
x^-1 contributes Delta^-1 x^(n-1) (and likewise for y), and the central
Delta^-1 factors migrate to the front.  The resulting pair

    (delta_power, alternating blocks with exponents < n resp. < m)

is a complete invariant of the group element, which settles the word
problem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import Alphabet, GenMap, Word, free_reduce

_STANDARD = Alphabet(["x", "y"])


def standard_alphabet() -> Alphabet:
    """The alphabet {x, y} of the standard torus knot presentation."""
    return _STANDARD


def _check_params(n: int, m: int) -> None:
    if n < 2 or m < 2:
        raise ValueError("parameters must be >= 2")
    if math.gcd(n, m) != 1:
        raise ValueError(f"gcd({n},{m}) != 1")


@dataclass(frozen=True)
class GarsideNF:
    """Normal form Delta^p * f1 | f2 | ... with simple factors f_i not 1, Delta."""

    n: int
    m: int
    delta_power: int
    factors: tuple[tuple[str, int], ...]  # ("x", a) with 1 <= a < n, or ("y", b)

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def __str__(self) -> str:
        parts = []
        if self.delta_power or not self.factors:
            parts.append(f"D^{self.delta_power}" if self.delta_power != 1 else "D")
        body = " | ".join(f"{sym}^{e}" if e != 1 else sym for sym, e in self.factors)
        if body:
            parts.append(body)
        return " · ".join(parts) if parts else "D^0"

    def to_word(self) -> Word:
        """Render back to a word over {x, y}."""
        letters: list[int] = []
        if self.delta_power >= 0:
            letters.extend([1] * (self.n * self.delta_power))
        else:
            letters.extend([-1] * (self.n * -self.delta_power))
        for sym, e in self.factors:
            letters.extend([1 if sym == "x" else 2] * e)
        return Word(_STANDARD, tuple(letters))


def gnf(n: int, m: int, w: Word) -> GarsideNF:
    """Left-greedy Garside normal form of a word over {x, y}."""
    _check_params(n, m)
    if w.alphabet != _STANDARD:
        raise ValueError("word must be over the standard alphabet {x, y}")
    bound = {"x": n, "y": m}
    power = 0
    blocks: list[list] = []  # [symbol, exponent], alternating

    def push(sym: str, e: int) -> None:
        # invariant: blocks alternate symbols with exponents in [1, bound-1],
        # so one merge and one Delta extraction suffice
        nonlocal power
        if blocks and blocks[-1][0] == sym:
            e += blocks.pop()[1]
        q, e = divmod(e, bound[sym])
        power += q
        if e:
            blocks.append([sym, e])

    for letter in w.letters:
        sym = "x" if abs(letter) == 1 else "y"
        if letter > 0:
            push(sym, 1)
        else:
            power -= 1
            push(sym, bound[sym] - 1)
    return GarsideNF(n, m, power, tuple((s, e) for s, e in blocks))


def gnf_equal(n: int, m: int, u: Word, v: Word) -> bool:
    return gnf(n, m, u) == gnf(n, m, v)


def simples(n: int, m: int) -> list[Word]:
    """All simple elements as positive words: 1, x^i, y^j, Delta = x^n."""
    out = [Word(_STANDARD, ())]
    out += [Word(_STANDARD, (1,) * i) for i in range(1, n)]
    out += [Word(_STANDARD, (2,) * j) for j in range(1, m)]
    out.append(Word(_STANDARD, (1,) * n))
    return out


def sigma(n: int, m: int) -> GenMap:
    """Standard to classical: x -> x_1...x_m, y -> x_1...x_n (indices mod n)."""
    _check_params(n, m)
    from .presentations import torus_classical

    target = torus_classical(n, m).alphabet
    images = {
        "x": Word(target, tuple(i % n + 1 for i in range(m))),
        "y": Word(target, tuple(i % n + 1 for i in range(n))),
    }
    return GenMap.from_dict(_STANDARD, target, images)


def meridian(n: int, m: int, a: int, b: int) -> Word:
    """The meridian y^a x^-b, valid when a n - b m = 1."""
    _check_params(n, m)
    if a * n - b * m != 1:
        raise ValueError(f"{a}*{n} - {b}*{m} != 1 (not a Bezout pair)")
    y = Word(_STANDARD, (2,))
    x = Word(_STANDARD, (1,))
    return free_reduce(y**a * x**-b)


def abelianized(w: Word, n: int, m: int) -> int:
    """Image in the infinite cyclic abelianization: x -> m, y -> n."""
    total = 0
    for letter in w.letters:
        weight = m if abs(letter) == 1 else n
        total += weight if letter > 0 else -weight
    return total


def separate_in_finite_quotients(n: int, m: int, u: Word, v: Word,
                                 max_cosets: int = 10**6) -> str:
    """Partial equality test for classical-presentation words.

    Maps both words into every finite toric quotient W(k,n,m) sharing the
    pair (n, m) and compares images; returns "distinct" on any separation
    and "not separated" otherwise.  There is no general decision procedure
    here: "not separated" is not a proof of equality.
    """
    from .cosets import CayleyTable, todd_coxeter
    from .presentations import toric

    if u.alphabet != v.alphabet:
        raise ValueError("words over different alphabets")
    ks = [k for (k, nn, mm) in _FINITE_TORIC if (nn, mm) == tuple(sorted((n, m)))]
    for k in ks:
        cay = CayleyTable(todd_coxeter(toric(k, n, m, normalize=False), max_cosets=max_cosets))
        if cay.eval(u) != cay.eval(v):
            return "distinct"
    return "not separated"


_FINITE_TORIC = [
    (2, 3, 4),
    (2, 3, 5),
    (3, 2, 3),
    (4, 2, 3),
    (5, 2, 3),
    (3, 2, 5),
] + [(2, 2, m) for m in range(3, 100, 2)]


def finite_toric_parameters(max_m: int = 99) -> list[tuple[int, int, int]]:
    """The complete list of finite toric parameter triples (2,2,m capped)."""
    return [(k, n, m) for (k, n, m) in _FINITE_TORIC if m <= max_m]
