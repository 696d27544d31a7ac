"""The homomorphisms connecting the group families.

- ``build_phi``: the quotient of a toric reflection group by its center,
  landing in the alternating subgroup of the triangle Coxeter group
  (x_i maps to b^(1-i) a b^(i-1) with a = r1 r2, b = r3 r2).
- ``build_psi``: the section of phi on the two-generator presentation of
  the alternating subgroup (a maps to x_1, b to the ell-th power of the
  m-factor product, where ell inverts m mod n).
- ``build_embedding``: the toric group as the normal closure of s in its
  parent J-group (x_i maps to t^(i-1) s t^(1-i)).
- ``central_element``: the full twist (x_1...x_n)^m, central by an
  explicit machine-checkable rewriting chain.

A homomorphism is verified by mapping every defining relator and asking a
word-problem oracle for the target whether the image is trivial; oracles
exist for Coxeter targets (minimal roots), finite quotients (Cayley
tables), and torus knot groups (Garside normal forms).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol

from . import garside
from .cosets import CayleyTable
from .coxeter import CoxeterMatrix, MinimalRootTable, minimal_root_table
from .presentations import Presentation, alt_plus, j_parent, toric
from .schreier import chain_implies_shift, chain_relators, delta_power_to_twist
from .words import Derivation, GenMap, RewriteStep, Word, apply_map
from .words import compose as compose_maps
from .words import free_reduce


class IdentityOracle(Protocol):
    def is_identity(self, w: Word) -> bool: ...


class CoxeterOracle:
    def __init__(self, table: MinimalRootTable):
        self.table = table

    def is_identity(self, w: Word) -> bool:
        return self.table.is_identity(w)


class CayleyOracle:
    def __init__(self, cayley: CayleyTable):
        self.cayley = cayley

    def is_identity(self, w: Word) -> bool:
        return self.cayley.eval(w) == 0


class GarsideOracle:
    def __init__(self, n: int, m: int):
        self.n, self.m = n, m

    def is_identity(self, w: Word) -> bool:
        return garside.gnf(self.n, self.m, w).is_identity()


class OracleUnavailable(RuntimeError):
    """The target's word problem is not decided by any attached oracle."""


@dataclass(frozen=True)
class Hom:
    source: Presentation
    genmap: GenMap
    oracle: IdentityOracle | None
    name: str = ""

    def apply(self, w: Word) -> Word:
        return apply_map(self.genmap, w)

    def with_oracle(self, oracle: IdentityOracle) -> "Hom":
        return Hom(self.source, self.genmap, oracle, self.name)


@dataclass(frozen=True)
class HomReport:
    ok: bool
    failing_relator: Word | None = None
    failing_image: Word | None = None


def check_hom(h: Hom) -> HomReport:
    """A generator map extends to a homomorphism iff every relator dies."""
    if h.oracle is None:
        raise OracleUnavailable(f"no word-problem oracle attached to {h.name or 'hom'}")
    for r in h.source.relators:
        image = h.apply(r)
        if not h.oracle.is_identity(image):
            return HomReport(False, r, image)
    return HomReport(True)


def compose_homs(outer: Hom, inner: Hom) -> Hom:
    return Hom(inner.source, compose_maps(outer.genmap, inner.genmap), outer.oracle,
               name=f"{outer.name} o {inner.name}")


def _require_coprime(n: int, m: int) -> None:
    if math.gcd(n, m) != 1:
        raise ValueError(f"gcd({n},{m}) != 1")


def build_phi(k: int, n: int, m: int) -> Hom:
    """Toric group onto the alternating subgroup of the triangle group."""
    _require_coprime(n, m)
    source = toric(k, n, m, normalize=False)
    cm = CoxeterMatrix.triangle(k, n, m)
    target = cm.alphabet()
    a = target.word("r1 r2")
    b = target.word("r3 r2")
    images = {}
    for i in range(1, n + 1):
        images[f"x{i}"] = free_reduce(b ** (1 - i) * a * b ** (i - 1))
    gm = GenMap.from_dict(source.alphabet, target, images)
    return Hom(source, gm, CoxeterOracle(minimal_root_table(cm)), name=f"phi({k},{n},{m})")


@dataclass(frozen=True)
class PsiParams:
    q: int
    r: int
    ell: int


def psi_params(n: int, m: int) -> PsiParams:
    """Euclidean data m = q n + r and the least ell with r ell = 1 mod n."""
    _require_coprime(n, m)
    q, r = divmod(m, n)
    ell = next(e for e in range(1, n + 1) if (r * e) % n == 1 % n)
    return PsiParams(q, r, ell)


def build_psi(k: int, n: int, m: int) -> Hom:
    """Section of phi: two-generator alternating presentation into the toric group.

    No oracle is attached: the word problem in an infinite toric group is
    open, and well-definedness is checked through phi images instead (see
    ``check_hom(compose_homs(build_phi(...), build_psi(...)))``).
    """
    params = psi_params(n, m)
    source = alt_plus(k, n, m)
    tor = toric(k, n, m, normalize=False)
    delta = Word(tor.alphabet, tuple(j % n + 1 for j in range(m)))
    images = {"a": tor.alphabet.word("x1"), "b": free_reduce(delta**params.ell)}
    gm = GenMap.from_dict(source.alphabet, tor.alphabet, images)
    return Hom(source, gm, None, name=f"psi({k},{n},{m})")


def build_embedding(k: int, n: int, m: int) -> Hom:
    """x_i = t^(i-1) s t^(1-i): the toric group inside its parent J-group."""
    _require_coprime(n, m)
    source = toric(k, n, m, normalize=False)
    parent = j_parent(k, n, m)
    t = parent.alphabet.word("t")
    s = parent.alphabet.word("s")
    images = {f"x{i}": free_reduce(t ** (i - 1) * s * t ** (1 - i)) for i in range(1, n + 1)}
    gm = GenMap.from_dict(source.alphabet, parent.alphabet, images)
    return Hom(source, gm, None, name=f"embed({k},{n},{m})")


def parent_to_coxeter(k: int, n: int, m: int) -> Hom:
    """s -> r1 r2, t -> r2 r3, u -> r3 r1 on the parent J-group."""
    source = j_parent(k, n, m)
    cm = CoxeterMatrix.triangle(k, n, m)
    target = cm.alphabet()
    images = {
        "s": target.word("r1 r2"),
        "t": target.word("r2 r3"),
        "u": target.word("r3 r1"),
    }
    gm = GenMap.from_dict(source.alphabet, target, images)
    return Hom(source, gm, CoxeterOracle(minimal_root_table(cm)), name=f"pi({k},{n},{m})")


def central_element(k: int, n: int, m: int) -> Word:
    """The full twist c = (x_1 ... x_n)^m in the toric alphabet."""
    _require_coprime(n, m)
    ab = toric(k, n, m, normalize=False).alphabet
    return Word(ab, tuple(i % n + 1 for i in range(n)) * m)


def _offset_steps(d: Derivation, offset: int) -> list[RewriteStep]:
    return [RewriteStep(s.position + offset, s.old, s.new, s.relator_index) for s in d.steps]


def centrality_witness(k: int, n: int, m: int, i: int) -> Derivation:
    """Explicit rewriting chain x_i c -> c x_i, citing only the chain relators.

    Check with ``check_derivation(w, chain_relators(n, m)[1])``.  The chain
    first rewrites c as the n-th power of the m-factor product delta, then
    pushes x_i through one delta at a time (each pass shifts the index by
    m mod n; after n passes the index returns to i), and finally restores c.
    """
    _require_coprime(n, m)
    if not 1 <= i <= n:
        raise ValueError("generator index out of range")
    ab, chains = chain_relators(n, m)
    c = Word(ab, tuple(j % n + 1 for j in range(n)) * m)
    start = free_reduce(Word(ab, (i,)) * c)
    steps: list[RewriteStep] = []
    # c -> delta^n, applied after the leading x_i (offset 1), in reverse
    to_twist = delta_power_to_twist(n, m)
    for s in reversed(to_twist.steps):
        steps.append(RewriteStep(s.position + 1, s.new, s.old, s.relator_index))
    cur = i
    for block in range(n):
        lemma = chain_implies_shift(n, m, cur)
        steps.extend(_offset_steps(lemma, block * m))
        cur = (cur + m - 1) % n + 1
    if cur != i:
        raise AssertionError("index did not return after n passes")
    steps.extend(_offset_steps(to_twist, 0))
    return Derivation(start, tuple(steps))


def phi_of_delta_exponent(n: int, m: int) -> int:
    """phi maps the m-factor product to b^r with r = m mod n."""
    return m % n
