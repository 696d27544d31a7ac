"""Free-group words over named generator alphabets.

Words are the common currency of every module in this package: relators,
subgroup generators, homomorphism images and normal forms are all words.
A word is stored as a flat sequence of signed 1-based generator indices
(+i for the i-th generator, -i for its inverse); exponents written in text
as ``g^K`` are expanded into repeated letters at parse time so that
reduction logic never has to treat syllables specially.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


@dataclass(frozen=True)
class Gen:
    """A named generator together with its position in its alphabet."""

    name: str
    index: int


class Alphabet:
    """An ordered list of uniquely named generators."""

    __slots__ = ("gens", "_by_name")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names!r}")
        for nm in names:
            if not nm or any(ch.isspace() for ch in nm) or "^" in nm or "=" in nm or "#" in nm:
                raise ValueError(f"invalid generator name {nm!r}")
            if nm == "1":
                raise ValueError("'1' is reserved for the empty word")
        self.gens = tuple(Gen(nm, i) for i, nm in enumerate(names))
        self._by_name = {nm: i for i, nm in enumerate(names)}

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Gen]:
        return iter(self.gens)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def index(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({' '.join(self.names)})"

    def word(self, text: str) -> "Word":
        """Parse a word in the shared text syntax (see :func:`parse_word`)."""
        return parse_word(self, text)

    def from_letters(self, letters: Sequence[int]) -> "Word":
        return Word(self, tuple(letters))


@dataclass(frozen=True)
class Word:
    """A word in the free group on an alphabet.

    ``letters`` holds nonzero signed indices; the empty tuple is the
    identity.  Construction does not reduce; use :func:`free_reduce` or the
    arithmetic operators, which reduce their results.
    """

    alphabet: Alphabet
    letters: tuple[int, ...]

    def __post_init__(self):
        n = len(self.alphabet)
        for x in self.letters:
            if x == 0 or abs(x) > n:
                raise ValueError(f"letter {x} out of range for {self.alphabet!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise ValueError("cannot multiply words over different alphabets")
        return free_reduce(Word(self.alphabet, self.letters + other.letters))

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else invert(self)
        return free_reduce(Word(self.alphabet, base.letters * abs(k)))

    def inverse(self) -> "Word":
        return invert(self)

    @property
    def is_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.letters, self.letters[1:]))

    def is_identity(self) -> bool:
        return not free_reduce(self).letters

    def __str__(self) -> str:
        return word_to_text(self)

    def gen_name(self, letter: int) -> str:
        return self.alphabet.gens[abs(letter) - 1].name


def free_reduce(w: Word) -> Word:
    """Delete adjacent inverse pairs until none remain (single stack pass)."""
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    if len(stack) == len(w.letters):
        return w
    return Word(w.alphabet, tuple(stack))


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple(-x for x in reversed(w.letters)))


def cyclic_reduce(w: Word) -> Word:
    """Free reduction followed by trimming matching first/last letters."""
    r = free_reduce(w)
    letters = r.letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == -letters[j - 1]:
        i += 1
        j -= 1
    return Word(w.alphabet, letters[i:j]) if (i, j) != (0, len(letters)) else r


def word_to_text(w: Word) -> str:
    """Render with syllable collapsing; the empty word prints as ``1``."""
    if not w.letters:
        return "1"
    parts: list[str] = []
    run_letter = w.letters[0]
    run = 1
    for x in w.letters[1:]:
        if x == run_letter:
            run += 1
        else:
            parts.append(_syllable(w, run_letter, run))
            run_letter, run = x, 1
    parts.append(_syllable(w, run_letter, run))
    return " ".join(parts)


def _syllable(w: Word, letter: int, count: int) -> str:
    name = w.gen_name(letter)
    k = count if letter > 0 else -count
    return name if k == 1 else f"{name}^{k}"


class WordSyntaxError(ValueError):
    def __init__(self, message: str, column: int | None = None):
        self.column = column
        super().__init__(message)


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse whitespace-separated tokens ``name``, ``name^K`` (K nonzero), or ``1``."""
    letters: list[int] = []
    col = 0
    for token in text.split():
        col = text.index(token, col)
        if token == "1":
            col += len(token)
            continue
        name, sep, exp = token.partition("^")
        if name not in alphabet:
            raise WordSyntaxError(f"unknown generator {name!r}", column=col + 1)
        k = 1
        if sep:
            try:
                k = int(exp)
            except ValueError:
                raise WordSyntaxError(f"bad exponent in {token!r}", column=col + 1) from None
            if k == 0:
                raise WordSyntaxError(f"zero exponent in {token!r}", column=col + 1)
        letter = alphabet.index(name) + 1
        letters.extend([letter if k > 0 else -letter] * abs(k))
        col += len(token)
    return Word(alphabet, tuple(letters))


@dataclass(frozen=True)
class GenMap:
    """A map of generators, the carrier of a homomorphism of free groups.

    Total on the source alphabet: ``images[i]`` is the image of source
    generator ``i`` as a word over the target alphabet.
    """

    source: Alphabet
    target: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise ValueError("one image required per source generator")
        for w in self.images:
            if w.alphabet != self.target:
                raise ValueError("image word over wrong alphabet")

    @staticmethod
    def identity(alphabet: Alphabet) -> "GenMap":
        return GenMap(alphabet, alphabet, tuple(Word(alphabet, (i + 1,)) for i in range(len(alphabet))))

    @staticmethod
    def from_dict(source: Alphabet, target: Alphabet, images: Mapping[str, Word]) -> "GenMap":
        missing = [g.name for g in source if g.name not in images]
        if missing:
            raise ValueError(f"no image for generators {missing}")
        return GenMap(source, target, tuple(images[g.name] for g in source))

    def image_of(self, name: str) -> Word:
        return self.images[self.source.index(name)]

    def __call__(self, w: Word) -> Word:
        return apply_map(self, w)


def apply_map(f: GenMap, w: Word) -> Word:
    """Letter-wise substitution followed by free reduction."""
    if w.alphabet != f.source:
        raise ValueError("word is not over the map's source alphabet")
    out: list[int] = []
    for x in w.letters:
        img = f.images[abs(x) - 1]
        out.extend(img.letters if x > 0 else tuple(-y for y in reversed(img.letters)))
    return free_reduce(Word(f.target, tuple(out)))


def compose(outer: GenMap, inner: GenMap) -> GenMap:
    """The map sending each generator g to outer(inner(g))."""
    if inner.target != outer.source:
        raise ValueError("alphabets do not compose")
    return GenMap(inner.source, outer.target, tuple(apply_map(outer, w) for w in inner.images))


# --- machine-checkable rewriting derivations -------------------------------
#
# A Derivation records a chain of words, each obtained from the previous one
# either by free insertion/deletion of inverse pairs or by replacing one
# occurrence of a subword u with v where u v^-1 freely reduces to a cited
# relator or its inverse.  Used for the explicit relator-substitution proofs
# (relation equivalence, centrality of the full twist).


@dataclass(frozen=True)
class RewriteStep:
    position: int
    old: Word
    new: Word
    relator_index: int | None  # None marks a purely free step


@dataclass(frozen=True)
class Derivation:
    start: Word
    steps: tuple[RewriteStep, ...]

    def words(self) -> list[Word]:
        ws = [self.start]
        for st in self.steps:
            cur = ws[-1]
            ws.append(_apply_step(cur, st))
        return ws

    def end(self) -> Word:
        return self.words()[-1]


def _apply_step(w: Word, step: RewriteStep) -> Word:
    i, old, new = step.position, step.old, step.new
    if w.letters[i : i + len(old.letters)] != old.letters:
        raise ValueError(f"step does not match word at position {i}")
    return Word(w.alphabet, w.letters[:i] + new.letters + w.letters[i + len(old.letters) :])


def check_derivation(d: Derivation, relators: Sequence[Word]) -> None:
    """Raise ValueError unless every step is justified by its citation."""
    cur = d.start
    for k, step in enumerate(d.steps):
        nxt = _apply_step(cur, step)
        diff = free_reduce(step.old * invert(step.new))
        if step.relator_index is None:
            if diff.letters:
                raise ValueError(f"step {k}: claimed free but differs by {diff}")
        else:
            rel = free_reduce(relators[step.relator_index])
            if diff.letters not in (rel.letters, invert(rel).letters):
                raise ValueError(f"step {k}: not an instance of relator {step.relator_index}")
        cur = nxt
