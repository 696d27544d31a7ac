"""Reidemeister-Schreier subgroup presentations from complete coset tables.

Given a complete coset table for a subgroup H, a breadth-first spanning
tree of the coset graph yields a Schreier transversal (every prefix of a
representative is itself a representative).  The non-tree edges carry the
Schreier generators k*x*(bar(kx))^-1 of H, and rewriting every conjugate of
every relator through the tree produces defining relations for H.

The BFS column order is configurable.  For a parent J-group on generators
(s, t, u) over the normal closure of s, the preset ``toric_column_order``
explores u first, then t, which makes the representatives exactly the
words u^i t^j; generator labels then carry the (i, j) pair so they can be
matched against closed-form expressions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .cosets import CosetTable, normal_closure_table
from .presentations import Presentation, j_parent, toric
from .words import (
    Alphabet,
    Derivation,
    GenMap,
    RewriteStep,
    Word,
    apply_map,
    check_derivation,
    cyclic_reduce,
    free_reduce,
    invert,
)


@dataclass(frozen=True)
class Transversal:
    """Schreier transversal: representative word per coset plus tree edges.

    Tree edges are (coset, column) pairs in the coset-table column
    convention; both orientations of every tree edge are included.
    """

    reps: tuple[Word, ...]
    tree: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.reps)


def toric_column_order(alphabet: Alphabet) -> list[int]:
    """Column order exploring u first, then t, then s.

    Over the normal closure of s in a parent J-group this reproduces the
    transversal {u^i t^j}: u chains are laid down first, then t chains off
    each u power.
    """
    names = list(alphabet.names)
    for required in ("s", "t", "u"):
        if required not in names:
            raise ValueError("toric column order needs generators s, t, u")
    pref = [names.index("u"), names.index("t"), names.index("s")]
    pref += [i for i in range(len(names)) if i not in pref]
    return [2 * i for i in pref]


def schreier_transversal(ct: CosetTable, column_order: Sequence[int] | None = None) -> Transversal:
    """BFS spanning tree with deterministic edge order.

    The default order walks the positive generator columns in alphabet
    order; in a complete table every column is a permutation, so positive
    words already reach every coset.  A custom ``column_order`` (a sequence
    of table columns) changes which representatives are found; it must
    still span the coset graph.
    """
    if not ct.complete:
        raise ValueError("coset table is not complete")
    ncols = 2 * len(ct.alphabet)
    if column_order is None:
        order = [2 * i for i in range(len(ct.alphabet))]
    else:
        order = list(column_order)
        if len(set(order)) != len(order) or any(c < 0 or c >= ncols for c in order):
            raise ValueError("column order must be a list of distinct table columns")
    reps: list[Word | None] = [None] * ct.num_cosets
    reps[0] = Word(ct.alphabet, ())
    tree: set[tuple[int, int]] = set()
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for col in order:
            b = ct.rows[a][col]
            if reps[b] is None:
                letter = col // 2 + 1 if col % 2 == 0 else -(col // 2 + 1)
                reps[b] = Word(ct.alphabet, reps[a].letters + (letter,))
                tree.add((a, col))
                tree.add((b, col ^ 1))
                queue.append(b)
    if any(r is None for r in reps):
        raise ValueError("column order does not span the coset graph")
    return Transversal(tuple(reps), frozenset(tree))  # type: ignore[arg-type]


@dataclass(frozen=True)
class SubgroupGenerator:
    """A Schreier generator with its provenance.

    ``value`` is the word k * x * (bar(kx))^-1 in the ambient group, where
    k is the representative of ``coset`` and x the generator named
    ``gen_name``; it traces coset 0 to itself.
    """

    name: str
    coset: int
    gen_name: str
    value: Word


@dataclass(frozen=True)
class RSResult:
    presentation: Presentation
    generators: tuple[SubgroupGenerator, ...]

    def value_map(self) -> dict[str, Word]:
        return {g.name: g.value for g in self.generators}


def toric_coset_labels(tr: Transversal) -> dict[int, tuple[int, int]]:
    """Read (i, j) off representatives of the form u^i t^j.

    Raises ValueError when a representative has any other shape.
    """
    labels: dict[int, tuple[int, int]] = {}
    for c, rep in enumerate(tr.reps):
        names = [rep.gen_name(x) for x in rep.letters]
        if any(x < 0 for x in rep.letters) or names != sorted(names, reverse=True):
            raise ValueError(f"representative {rep} is not of the form u^i t^j")
        i = names.count("u")
        j = names.count("t")
        if names != ["u"] * i + ["t"] * j:
            raise ValueError(f"representative {rep} is not of the form u^i t^j")
        labels[c] = (i, j)
    return labels


def rs_presentation(p: Presentation, ct: CosetTable, tr: Transversal,
                    namer: Callable[[int, str], str] | None = None) -> RSResult:
    """Subgroup presentation on the nontrivial Schreier generators.

    Relators are the rewrites of k R k^-1 for every relator R of p and every
    representative k, processed in coset-index order, freely reduced, with
    tree (trivial) generators dropped.
    """
    if not ct.complete:
        raise ValueError("coset table is not complete")
    if namer is None:
        namer = lambda coset, gen: f"{gen}_c{coset}"

    ngens = len(p.alphabet)
    gen_index: dict[tuple[int, int], int] = {}
    sub_gens: list[SubgroupGenerator] = []
    for c in range(ct.num_cosets):
        for g in range(ngens):
            col = 2 * g
            if (c, col) in tr.tree:
                continue
            name = namer(c, p.alphabet.gens[g].name)
            dest = ct.rows[c][col]
            value = free_reduce(
                Word(p.alphabet, tr.reps[c].letters + (g + 1,) + invert(tr.reps[dest]).letters)
            )
            gen_index[(c, g)] = len(sub_gens)
            sub_gens.append(SubgroupGenerator(name, c, p.alphabet.gens[g].name, value))

    sub_alphabet = Alphabet([g.name for g in sub_gens])

    def rewrite_from(coset: int, w: Word) -> Word:
        out: list[int] = []
        q = coset
        for x in w.letters:
            g = abs(x) - 1
            if x > 0:
                if (q, 2 * g) not in tr.tree:
                    out.append(gen_index[(q, g)] + 1)
                q = ct.rows[q][2 * g]
            else:
                q2 = ct.rows[q][2 * g + 1]
                if (q2, 2 * g) not in tr.tree:
                    out.append(-(gen_index[(q2, g)] + 1))
                q = q2
        return free_reduce(Word(sub_alphabet, tuple(out)))

    relators: list[Word] = []
    for c in range(ct.num_cosets):
        for r in p.relators:
            w = rewrite_from(c, r)
            if w.letters:
                relators.append(w)
    return RSResult(Presentation(sub_alphabet, tuple(relators)), tuple(sub_gens))


# --- closed-form Schreier generators for the toric transversal --------------


def _s_alphabet(n: int) -> Alphabet:
    return Alphabet([f"s{i}" for i in range(n)])


def closed_form_generator(k: int, n: int, m: int, which: str, ell: int, p: int) -> Word:
    """Closed form of a Schreier generator over s_0, ..., s_{n-1}.

    For the normal closure of s in the parent J-group with parameters
    (k, n, m) and the u-then-t transversal, the generator at coset
    (m-1-ell, p-1) in the s family is the conjugate

        s_0 s_1 ... s_ell  s_{p+ell}  s_ell^-1 ... s_0^-1,

    and the generator at coset (m-1-ell, p) in the u family is

        s_0 s_1 ... s_ell  s_{p+ell}^-1  s_{ell-1}^-1 ... s_0^-1,

    with s indices taken modulo n.  Ranges: 0 <= ell <= m-1, and
    1 <= p <= n for the s family, 1 <= p <= n-1 for the u family.
    """
    if which not in ("s", "u"):
        raise ValueError("which must be 's' or 'u'")
    if not 0 <= ell <= m - 1:
        raise ValueError(f"ell out of range: {ell}")
    top = n if which == "s" else n - 1
    if not 1 <= p <= top:
        raise ValueError(f"p out of range for the {which} family: {p}")
    ab = _s_alphabet(n)
    prefix = [i % n + 1 for i in range(ell + 1)]
    if which == "s":
        middle = [(p + ell) % n + 1]
        suffix = [-(i % n + 1) for i in range(ell, -1, -1)]
    else:
        middle = [-((p + ell) % n + 1)]
        suffix = [-(i % n + 1) for i in range(ell - 1, -1, -1)]
    return free_reduce(Word(ab, tuple(prefix + middle + suffix)))


# --- relation equivalence as explicit derivations ---------------------------


def _chain_words(ab: Alphabet, n: int, m: int) -> list[Word]:
    return [Word(ab, tuple((i + j) % n + 1 for j in range(m))) for i in range(n)]


def chain_relators(n: int, m: int) -> tuple[Alphabet, list[Word]]:
    """The anchored chain relators of the classical presentation, indexed so
    that relator j-2 says x_1...x_m = x_j...x_{j+m-1} (j = 2..n)."""
    ab = Alphabet([f"x{i + 1}" for i in range(n)])
    prods = _chain_words(ab, n, m)
    rels = [free_reduce(prods[0] * invert(prods[j - 1])) for j in range(2, n + 1)]
    return ab, rels


def shift_relators(n: int, m: int) -> tuple[Alphabet, list[Word]]:
    """Relators saying x_i (x_1...x_m) = (x_1...x_m) x_{i+m}, for i = 1..n."""
    ab = Alphabet([f"x{i + 1}" for i in range(n)])
    delta = Word(ab, tuple(j % n + 1 for j in range(m)))
    rels = []
    for i in range(1, n + 1):
        lhs = Word(ab, (i,)) * delta
        rhs = delta * Word(ab, ((i + m - 1) % n + 1,))
        rels.append(free_reduce(lhs * invert(rhs)))
    return ab, rels


def cyclic_canonical(w: Word) -> tuple[int, ...]:
    """Canonical letter tuple among all rotations of a relator and its inverse."""
    w = cyclic_reduce(w)
    best: tuple[int, ...] | None = None
    for cand in (w.letters, invert(w).letters):
        for k in range(max(1, len(cand))):
            rot = cand[k:] + cand[:k]
            if best is None or rot < best:
                best = rot
    return best if best is not None else ()


def derive_toric_presentation(k: int, n: int, m: int, max_cosets: int = 10**6) -> RSResult:
    """Derive the toric presentation of the normal closure of s in a parent J-group.

    Runs Reidemeister-Schreier over the {u^i t^j} transversal, substitutes
    the closed form of every Schreier generator (a word in s_0..s_{n-1}),
    and reduces.  The surviving relators are checked to be, up to rotation
    and inversion, exactly the toric relators plus shift relators
    x_i d = d x_{i+m} (d the m-factor product); each shift relator is
    deleted only after its derivation from the chain relators has been
    machine-checked.  The result is the toric presentation on the renamed
    generators s_i = x_{i+1}.
    """
    parent = j_parent(k, n, m)
    table = normal_closure_table(parent, [parent.alphabet.word("s")], max_cosets=max_cosets)
    if not table.complete:
        raise ValueError("enumeration of the parent over the normal closure overflowed")
    tr = schreier_transversal(table, toric_column_order(parent.alphabet))
    labels = toric_coset_labels(tr)
    rs = rs_presentation(parent, table, tr,
                         namer=lambda c, g: f"{g}_{labels[c][0]}_{labels[c][1]}")

    target = _s_alphabet(n)
    images: dict[str, Word] = {}
    for g in rs.generators:
        i, j = labels[g.coset]
        if g.gen_name == "s":
            images[g.name] = closed_form_generator(k, n, m, "s", m - 1 - i, j + 1)
        elif g.gen_name == "u":
            images[g.name] = Word(target, ()) if j == 0 else closed_form_generator(k, n, m, "u", m - 1 - i, j)
        else:  # t wrap generators are trivial in the subgroup
            images[g.name] = Word(target, ())
    gm = GenMap.from_dict(rs.presentation.alphabet, target, images)

    rewritten: list[Word] = []
    seen: set[tuple[int, ...]] = set()
    for r in rs.presentation.relators:
        w = cyclic_reduce(apply_map(gm, r))
        key = cyclic_canonical(w)
        if key and key not in seen:
            seen.add(key)
            rewritten.append(w)

    reference = toric(k, n, m, normalize=False)
    ref_canon = {cyclic_canonical(r): r for r in reference.relators}
    _, chains = chain_relators(n, m)
    shift_canon = {}
    _, shifts = shift_relators(n, m)
    for i, r in enumerate(shifts, start=1):
        shift_canon[cyclic_canonical(r)] = i
    found: set[tuple[int, ...]] = set()
    for w in rewritten:
        key = cyclic_canonical(w)
        if key in ref_canon:
            found.add(key)
        elif key in shift_canon:
            d = chain_implies_shift(n, m, shift_canon[key])
            check_derivation(d, chains)  # justified deletion
        else:
            raise AssertionError(f"unexpected relator {w} in rewritten presentation")
    if found != set(ref_canon):
        raise AssertionError("rewriting did not produce every toric relator")

    out = Presentation(target, tuple(Word(target, r.letters) for r in reference.relators))
    return RSResult(out, rs.generators)


def chain_from_shift_derivations(n: int, m: int) -> list[Derivation]:
    """Derivations of x_j...x_{j+m-1} -> x_1...x_m for j = 2..n from the shifts.

    The j-th derivation cites the shift relators followed by the already
    derived chain relators d_2, ..., d_{j-1} (the inductive hypothesis), so
    check it against ``shift_relators(n, m)[1] + chain_relators(n, m)[1][:j-2]``.
    Each derivation inserts x_{j-1}^-1 x_{j-1} in front, rewrites the m-factor
    product starting at x_{j-1} to delta by the previous chain, then pushes
    x_{j-1} back through delta by the shift relator and cancels.
    """
    ab, shifts = shift_relators(n, m)
    prods = _chain_words(ab, n, m)
    delta = prods[0]
    out: list[Derivation] = []
    for j in range(2, n + 1):
        i = j - 1  # the generator inserted in front
        start = prods[j - 1]
        steps: list[RewriteStep] = []
        steps.append(RewriteStep(0, Word(ab, ()), Word(ab, (-i, i)), None))
        if i != 1:
            # x_i x_j ... has prefix (after the inserted pair) x_i x_{i+1} ...
            steps.append(RewriteStep(1, prods[i - 1], delta, len(shifts) + (i - 2)))
        # now the word is x_i^-1 * delta * x_{i+m}; rewrite by the shift i
        shifted_letter = (i + m - 1) % n + 1
        steps.append(
            RewriteStep(
                1,
                free_reduce(delta * Word(ab, (shifted_letter,))),
                free_reduce(Word(ab, (i,)) * delta),
                i - 1,
            )
        )
        steps.append(RewriteStep(0, Word(ab, (-i, i)), Word(ab, ()), None))
        out.append(Derivation(start, tuple(steps)))
    return out


def chain_implies_shift(n: int, m: int, i: int) -> Derivation:
    """Derivation of x_i * delta -> delta * x_{i+m} using chain relators only.

    delta = x_1...x_m with indices mod n.  Two substitutions: rewrite delta
    as the product starting at x_{i+1}, then rewrite the m-factor prefix
    starting at x_i back to delta.  Either substitution is skipped when its
    chain index is 1 (the rewrite is the identity).
    """
    ab, chains = chain_relators(n, m)
    prods = _chain_words(ab, n, m)
    delta = prods[0]
    if not 1 <= i <= n:
        raise ValueError("generator index out of range")
    start = free_reduce(Word(ab, (i,)) * delta)
    steps: list[RewriteStep] = []
    j1 = (i % n) + 1  # chain index for the product starting at x_{i+1}
    if j1 != 1:
        steps.append(RewriteStep(1, delta, prods[j1 - 1], j1 - 2))
    j2 = i  # chain index for the product starting at x_i
    if j2 != 1:
        steps.append(RewriteStep(0, prods[j2 - 1], delta, j2 - 2))
    return Derivation(start, tuple(steps))


def delta_power_to_twist(n: int, m: int) -> Derivation:
    """Derivation of delta^n -> (x_1...x_n)^m (both equal to the full twist).

    Rewrites the t-th delta factor to start at x_{tm+1}; the result is the
    literal word x_1 x_2 ... x_{nm} with indices mod n, which is identical
    to (x_1...x_n)^m letter by letter.
    """
    ab, chains = chain_relators(n, m)
    prods = _chain_words(ab, n, m)
    delta = prods[0]
    start = Word(ab, delta.letters * n)
    steps = []
    for t in range(n):
        j = (t * m) % n + 1
        if j != 1:
            steps.append(RewriteStep(t * m, delta, prods[j - 1], j - 2))
    return Derivation(start, tuple(steps))
