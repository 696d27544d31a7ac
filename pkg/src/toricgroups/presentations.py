"""Presentation families, a small file format, and Tietze simplification.

Every group studied by this package is built here: torus knot groups in
their standard, classical and dual presentations, toric reflection groups
W(k,n,m), parent J-groups, rank-3 triangle Coxeter groups, and the
two-generator presentation of the alternating subgroup of a triangle group.

Relations written as chains u1 = u2 = ... = up are stored anchored at the
first word, as the p-1 relators u1*u2^-1, ..., u1*up^-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import Alphabet, Word, WordSyntaxError, cyclic_reduce, free_reduce, invert, parse_word, word_to_text


class ParameterError(ValueError):
    """A family parameter outside its domain (label < 2, gcd violation)."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relators: tuple[Word, ...]

    def __post_init__(self):
        for r in self.relators:
            if r.alphabet != self.alphabet:
                raise ValueError("relator over wrong alphabet")

    @property
    def gens(self) -> tuple[str, ...]:
        return self.alphabet.names

    def __str__(self) -> str:
        return serialize(self)


FAMILIES = (
    "torus-standard",
    "torus-classical",
    "torus-dual",
    "toric",
    "j-parent",
    "coxeter-triangle",
    "alt-plus",
    "alt-toric",
)

# Number of integer labels each family takes.
_ARITY = {
    "torus-standard": 2,
    "torus-classical": 2,
    "torus-dual": 2,
    "toric": 3,
    "j-parent": 3,
    "coxeter-triangle": 3,
    "alt-plus": 3,
    "alt-toric": 3,
}

# Families whose (n, m) pair must be coprime.
_COPRIME = {"torus-standard", "torus-classical", "torus-dual", "toric", "alt-toric"}


@dataclass(frozen=True)
class FamilyParams:
    family: str
    labels: tuple[int, ...]
    normalize: bool = True  # toric only: swap (n, m) when n > m

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")
        if len(self.labels) != _ARITY[self.family]:
            raise ParameterError(
                f"{self.family} takes {_ARITY[self.family]} labels, got {len(self.labels)}"
            )
        for v in self.labels:
            if not isinstance(v, int) or v < 2:
                raise ParameterError(f"labels must be integers >= 2, got {v!r}")
        if self.family in _COPRIME:
            n, m = self.labels[-2:]
            if math.gcd(n, m) != 1:
                raise ParameterError(f"gcd({n},{m}) != 1")


def build(params: FamilyParams) -> Presentation:
    """Construct the presentation for a validated parameter set."""
    fam, labels = params.family, params.labels
    if fam == "torus-standard":
        return torus_standard(*labels)
    if fam == "torus-classical":
        return torus_classical(*labels)
    if fam == "torus-dual":
        return torus_dual(*labels)
    if fam == "toric":
        return toric(*labels, normalize=params.normalize)
    if fam == "j-parent":
        return j_parent(*labels)
    if fam == "coxeter-triangle":
        return coxeter_triangle(*labels)
    if fam == "alt-plus":
        return alt_plus(*labels)
    return alt_toric(*labels)


def _check(family: str, *labels: int, normalize: bool = True) -> FamilyParams:
    return FamilyParams(family, tuple(labels), normalize=normalize)


def torus_standard(n: int, m: int) -> Presentation:
    """The two-generator torus knot group presentation: x^n = y^m."""
    _check("torus-standard", n, m)
    ab = Alphabet(["x", "y"])
    x, y = ab.word("x"), ab.word("y")
    return Presentation(ab, (free_reduce(x**n * invert(y**m)),))


def _cyclic_products(ab: Alphabet, n: int, length: int) -> list[Word]:
    """The n products g_i g_{i+1} ... of the given length, indices mod n."""
    out = []
    for i in range(n):
        letters = tuple((i + j) % n + 1 for j in range(length))
        out.append(Word(ab, letters))
    return out


def _chain(words: list[Word]) -> list[Word]:
    """Relators u1*ui^-1 anchoring a chain equality at its first word."""
    head = words[0]
    return [free_reduce(head * invert(w)) for w in words[1:]]


def torus_classical(n: int, m: int) -> Presentation:
    """n meridian generators, the n-term chain of m-factor products."""
    _check("torus-classical", n, m)
    ab = Alphabet([f"x{i + 1}" for i in range(n)])
    return Presentation(ab, tuple(_chain(_cyclic_products(ab, n, m))))


def torus_dual(n: int, m: int) -> Presentation:
    """m generators, chain of n-factor products (the dual presentation)."""
    _check("torus-dual", n, m)
    ab = Alphabet([f"y{i + 1}" for i in range(m)])
    return Presentation(ab, tuple(_chain(_cyclic_products(ab, m, n))))


def toric(k: int, n: int, m: int, normalize: bool = True) -> Presentation:
    """The toric reflection group W(k,n,m): classical presentation plus x_i^k.

    W(k,n,m) and W(k,m,n) are reflection isomorphic, so by default n > m is
    normalized by swapping; pass ``normalize=False`` to keep the literal
    parameters (useful when comparing against rewriting output).
    """
    _check("toric", k, n, m, normalize=normalize)
    if normalize and n > m:
        n, m = m, n
    ab = Alphabet([f"x{i + 1}" for i in range(n)])
    orders = [free_reduce(Word(ab, (i + 1,) * k)) for i in range(n)]
    return Presentation(ab, tuple(orders + _chain(_cyclic_products(ab, n, m))))


def j_parent(a: int, b: int, c: int) -> Presentation:
    """The parent J-group <s,t,u | s^a = t^b = u^c = 1, stu = tus = ust>."""
    _check("j-parent", a, b, c)
    ab = Alphabet(["s", "t", "u"])
    s, t, u = (ab.word(nm) for nm in "stu")
    chain = _chain([s * t * u, t * u * s, u * s * t])
    return Presentation(ab, (s**a, t**b, u**c) + tuple(chain))


def coxeter_triangle(k: int, n: int, m: int) -> Presentation:
    """Rank-3 Coxeter group whose diagram is a triangle labelled k, n, m."""
    _check("coxeter-triangle", k, n, m)
    ab = Alphabet(["r1", "r2", "r3"])
    r1, r2, r3 = (ab.word(f"r{i}") for i in (1, 2, 3))
    rels = (r1**2, r2**2, r3**2, (r1 * r2) ** k, (r2 * r3) ** n, (r3 * r1) ** m)
    return Presentation(ab, rels)


def alt_plus(k: int, n: int, m: int) -> Presentation:
    """Two-generator presentation of the alternating subgroup of a triangle group."""
    _check("alt-plus", k, n, m)
    ab = Alphabet(["a", "b"])
    a, b = ab.word("a"), ab.word("b")
    return Presentation(ab, (a**k, b**n, (b * a.inverse()) ** m))


def alt_toric(k: int, n: int, m: int) -> Presentation:
    """The toric presentation with the full twist (x1...xn)^m killed."""
    _check("alt-toric", k, n, m)
    base = toric(k, n, m, normalize=False)
    twist = Word(base.alphabet, tuple(i + 1 for i in range(n)) * m)
    return Presentation(base.alphabet, base.relators + (twist,))


# --- file format ------------------------------------------------------------


def serialize(p: Presentation) -> str:
    """Bit-exact text form: gens line first, then relators in stored order."""
    lines = ["gens: " + " ".join(p.gens)]
    lines.extend("rel: " + word_to_text(r) for r in p.relators)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    alphabet: Alphabet | None = None
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError("expected 'gens:' or 'rel:' line", lineno)
        if key == "gens":
            if alphabet is not None:
                raise ParseError("duplicate gens line", lineno)
            names = rest.split()
            if not names:
                raise ParseError("empty generator list", lineno)
            try:
                alphabet = Alphabet(names)
            except ValueError as e:
                raise ParseError(str(e), lineno) from None
        elif key == "rel":
            if alphabet is None:
                raise ParseError("rel line before gens line", lineno)
            sides = rest.split("=")
            words = []
            for side in sides:
                if not side.split():
                    raise ParseError("empty word in relation", lineno, column=raw.index("=") + 1 if "=" in raw else 1)
                try:
                    words.append(parse_word(alphabet, side))
                except WordSyntaxError as e:
                    raise ParseError(str(e), lineno, column=e.column or 1) from None
            if len(words) == 1:
                relators.append(free_reduce(words[0]))
            else:
                relators.extend(free_reduce(words[0] * invert(w)) for w in words[1:])
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if alphabet is None:
        raise ParseError("missing gens line", max(1, len(text.splitlines())))
    return Presentation(alphabet, tuple(relators))


# --- Tietze simplification --------------------------------------------------


class TietzeBudgetExceeded(Exception):
    """Raised when the step budget runs out; carries the best presentation so far."""

    def __init__(self, best: Presentation):
        self.best = best
        super().__init__("tietze step budget exceeded")


def _normalize_relators(relators: list[Word]) -> list[Word]:
    seen: set[tuple[int, ...]] = set()
    out: list[Word] = []
    for r in relators:
        r = cyclic_reduce(r)
        if not r.letters or r.letters in seen:
            continue
        seen.add(r.letters)
        out.append(r)
    return out


def _single_occurrence(r: Word, gen: int) -> int | None:
    """Position of the unique occurrence of +-gen in r, else None."""
    hits = [i for i, x in enumerate(r.letters) if abs(x) == gen]
    return hits[0] if len(hits) == 1 else None


def tietze_simplify(p: Presentation, budget: int = 10_000) -> Presentation:
    """Shrink a presentation by generator elimination.

    Moves used: free and cyclic reduction of relators, deletion of trivial
    and duplicate relators, and elimination of a generator that occurs
    exactly once in some relator (substituting it everywhere else).
    Elimination picks the lowest generator index first, breaking ties by the
    shortest defining relator, so the output is deterministic.
    """
    alphabet = p.alphabet
    relators = _normalize_relators(list(p.relators))
    steps = 0
    while True:
        choice: tuple[int, int, int] | None = None  # (gen index, relator idx, position)
        for g in range(1, len(alphabet) + 1):
            candidates = []
            for ri, r in enumerate(relators):
                pos = _single_occurrence(r, g)
                if pos is not None:
                    candidates.append((len(r.letters), ri, pos))
            if candidates:
                _, ri, pos = min(candidates)
                choice = (g, ri, pos)
                break
        if choice is None:
            break
        if steps >= budget:
            raise TietzeBudgetExceeded(Presentation(alphabet, tuple(relators)))
        steps += 1
        g, ri, pos = choice
        rel = relators.pop(ri)
        # Rotate so the eliminated letter is first: rel ~ g^e * w, so g^e = w^-1.
        rot = Word(alphabet, rel.letters[pos:] + rel.letters[:pos])
        e = 1 if rot.letters[0] > 0 else -1
        tail = Word(alphabet, rot.letters[1:])
        image = invert(tail) if e == 1 else tail

        keep = [i for i in range(1, len(alphabet) + 1) if i != g]
        new_alphabet = Alphabet([alphabet.gens[i - 1].name for i in keep])
        remap = {old: new + 1 for new, old in enumerate(keep)}

        def substituted(w: Word) -> Word:
            out: list[int] = []
            for x in w.letters:
                if abs(x) == g:
                    out.extend(image.letters if x > 0 else tuple(-y for y in reversed(image.letters)))
                else:
                    out.append(x)
            return Word(new_alphabet, tuple((1 if x > 0 else -1) * remap[abs(x)] for x in out))

        relators = _normalize_relators([substituted(r) for r in relators])
        alphabet = new_alphabet
    return Presentation(alphabet, tuple(relators))
