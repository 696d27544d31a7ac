import pathlib

import pytest

from conftest import closure_table, parent_cayley

from toricgroups import presentations as pres
from toricgroups.cosets import group_order, todd_coxeter
from toricgroups.presentations import parse_presentation, serialize, tietze_simplify
from toricgroups.schreier import (
    chain_from_shift_derivations,
    chain_implies_shift,
    chain_relators,
    closed_form_generator,
    cyclic_canonical,
    delta_power_to_twist,
    derive_toric_presentation,
    rs_presentation,
    schreier_transversal,
    shift_relators,
    toric_column_order,
    toric_coset_labels,
)
from toricgroups.words import Word, apply_map, check_derivation, free_reduce, invert

DATA = pathlib.Path(__file__).parent / "data"


def test_cyclic_group_transversal():
    p = parse_presentation("gens: x\nrel: x^3")
    tr = schreier_transversal(todd_coxeter(p))
    assert [str(w) for w in tr.reps] == ["1", "x", "x^2"]


def test_transversal_size_matches_table():
    table = closure_table(2, 3, 4)
    tr = schreier_transversal(table)
    assert len(tr) == table.num_cosets


def test_transversal_requires_complete_table():
    incomplete = todd_coxeter(pres.toric(6, 2, 3), max_cosets=100)
    with pytest.raises(ValueError):
        schreier_transversal(incomplete)


def test_toric_preset_gives_u_then_t_representatives():
    parent = pres.j_parent(2, 3, 4)
    table = closure_table(2, 3, 4)
    tr = schreier_transversal(table, toric_column_order(parent.alphabet))
    labels = toric_coset_labels(tr)
    assert len(labels) == 12
    for coset, (i, j) in labels.items():
        expected = Word(parent.alphabet, (3,) * i + (2,) * j)  # u^i t^j
        assert tr.reps[coset] == expected
    # Schreier property: every prefix of a representative is a representative
    rep_set = {w.letters for w in tr.reps}
    for w in tr.reps:
        for cut in range(len(w.letters)):
            assert w.letters[:cut] in rep_set


def test_index_one_subgroup_reproduces_presentation():
    p = pres.toric(3, 2, 3)
    table = todd_coxeter(p, [p.alphabet.word("x1"), p.alphabet.word("x2")])
    assert table.num_cosets == 1
    tr = schreier_transversal(table)
    rs = rs_presentation(p, table, tr)
    assert len(rs.presentation.gens) == len(p.gens)
    relabel = dict(zip(rs.presentation.gens, p.gens))
    got = {tuple(relabel[rs.presentation.alphabet.gens[abs(x) - 1].name] + ("+" if x > 0 else "-")
                 for x in r.letters)
           for r in rs.presentation.relators}
    want = {tuple(p.alphabet.gens[abs(x) - 1].name + ("+" if x > 0 else "-") for x in r.letters)
            for r in p.relators}
    assert got == want


def test_schreier_generator_values_lie_in_subgroup():
    parent = pres.j_parent(2, 3, 4)
    table = closure_table(2, 3, 4)
    tr = schreier_transversal(table, toric_column_order(parent.alphabet))
    rs = rs_presentation(parent, table, tr)
    for g in rs.generators:
        assert table.trace(0, g.value) == 0


def test_rs_plus_tietze_reaches_n_generators_and_right_order(finite_rows):
    for k, n, m in finite_rows:
        parent = pres.j_parent(k, n, m)
        table = closure_table(k, n, m)
        tr = schreier_transversal(table, toric_column_order(parent.alphabet))
        labels = toric_coset_labels(tr)
        rs = rs_presentation(parent, table, tr,
                             namer=lambda c, g: f"{g}_{labels[c][0]}_{labels[c][1]}")
        simplified = tietze_simplify(rs.presentation)
        assert len(simplified.gens) == n, (k, n, m)
        assert group_order(simplified) == group_order(pres.toric(k, n, m)), (k, n, m)


def test_rs_on_j323_gives_two_generator_order_24():
    parent = pres.j_parent(3, 2, 3)
    table = closure_table(3, 2, 3)
    assert table.num_cosets == 6
    tr = schreier_transversal(table, toric_column_order(parent.alphabet))
    rs = rs_presentation(parent, table, tr)
    simplified = tietze_simplify(rs.presentation)
    assert len(simplified.gens) == 2
    assert group_order(simplified) == 24


# --- closed forms ---------------------------------------------------------------


def test_closed_form_base_cases():
    # ell = 0: s_{m-1,p-1} = s0 s_p s0^-1 and u_{m-1,p} = s0 s_p^-1
    w = closed_form_generator(2, 3, 4, "s", 0, 2)
    assert str(w) == "s0 s2 s0^-1"
    w = closed_form_generator(2, 3, 4, "u", 0, 2)
    assert str(w) == "s0 s2^-1"


def test_closed_form_top_case_wraps_mod_n():
    # ell = m-1 expresses s_{0,i-1} through the full descending conjugator
    w = closed_form_generator(2, 3, 4, "s", 3, 2)
    assert str(w) == "s0 s1 s2 s0 s2 s0^-1 s2^-1 s1^-1 s0^-1"


def test_closed_form_range_errors():
    with pytest.raises(ValueError):
        closed_form_generator(2, 3, 4, "s", 4, 1)
    with pytest.raises(ValueError):
        closed_form_generator(2, 3, 4, "u", 0, 3)
    with pytest.raises(ValueError):
        closed_form_generator(2, 3, 4, "q", 0, 1)


@pytest.mark.parametrize("k,n,m", [(2, 3, 4), (3, 2, 3), (2, 3, 5)])
def test_closed_forms_match_generic_rewriting_in_parent(k, n, m):
    """Closed forms and the Schreier generator values agree as elements."""
    parent = pres.j_parent(k, n, m)
    table = closure_table(k, n, m)
    tr = schreier_transversal(table, toric_column_order(parent.alphabet))
    labels = toric_coset_labels(tr)
    rs = rs_presentation(parent, table, tr)
    by_label = {(labels[g.coset], g.gen_name): g for g in rs.generators}
    cay = parent_cayley(k, n, m)
    t = parent.alphabet.word("t")
    s = parent.alphabet.word("s")
    s_values = [free_reduce(t**j * s * t**-j) for j in range(n)]

    def element_of_closed_form(w: Word) -> int:
        acc = Word(parent.alphabet, ())
        for letter in w.letters:
            val = s_values[abs(letter) - 1]
            acc = acc * (val if letter > 0 else invert(val))
        return cay.eval(acc)

    mismatches = 0
    for ell in range(m):
        for p in range(1, n + 1):
            gen = by_label[((m - 1 - ell, p - 1), "s")]
            if element_of_closed_form(closed_form_generator(k, n, m, "s", ell, p)) != cay.eval(gen.value):
                mismatches += 1
        for p in range(1, n):
            gen = by_label[((m - 1 - ell, p), "u")]
            if element_of_closed_form(closed_form_generator(k, n, m, "u", ell, p)) != cay.eval(gen.value):
                mismatches += 1
    assert mismatches == 0


@pytest.mark.parametrize("k,n,m", [(2, 3, 4), (3, 2, 3), (2, 3, 5), (2, 2, 5)])
def test_closed_forms_satisfy_recurrences_freely(k, n, m):
    """On the wrap-free rows, the three-term relations between neighbouring
    Schreier generators become literal free-word identities once the closed
    forms are substituted (only inverse pairs cancel)."""

    def cf_s(i, j):
        return closed_form_generator(k, n, m, "s", m - 1 - (i % m), j + 1)

    def cf_u(i, j):
        return closed_form_generator(k, n, m, "u", m - 1 - (i % m), j)

    for i in range(m - 1):
        a = free_reduce(cf_s(i, 0) * cf_u(i, 1))
        b = free_reduce(cf_u(i, 1) * cf_s(i + 1, 1))
        c = free_reduce(cf_s(i + 1, 0))
        assert a == b == c, ("first", i)
        for j in range(2, n):
            a = free_reduce(cf_s(i, j - 1) * cf_u(i, j))
            b = free_reduce(cf_u(i, j) * cf_s(i + 1, j))
            c = free_reduce(cf_u(i, j - 1) * cf_s(i + 1, j - 1))
            assert a == b == c, ("second", i, j)
        assert free_reduce(cf_s(i, n - 1)) == free_reduce(cf_s(i + 1, 0)) == free_reduce(
            cf_u(i, n - 1) * cf_s(i + 1, n - 1)
        ), ("third", i)


def test_golden_file_234_matches_derivation_and_display():
    res = derive_toric_presentation(2, 3, 4)
    golden = (DATA / "rs_234_golden.txt").read_text()
    assert serialize(res.presentation) == golden
    # Documented relabeling s_j -> x_{j+1} turns the golden file into the
    # display presentation of the toric group, relator for relator.
    relabeled = golden
    for j in range(3):
        relabeled = relabeled.replace(f"s{j}", f"x{j + 1}")
    assert relabeled == serialize(pres.toric(2, 3, 4, normalize=False))


def test_derive_toric_presentation_all_rows(finite_rows):
    for k, n, m in finite_rows:
        res = derive_toric_presentation(k, n, m)
        assert len(res.presentation.gens) == n
        relabeled = serialize(res.presentation)
        for j in range(n):
            relabeled = relabeled.replace(f"s{j}", f"x{j + 1}")
        assert relabeled == serialize(pres.toric(k, n, m, normalize=False))


# --- relation equivalence as derivations -----------------------------------------


@pytest.mark.parametrize("n,m", [(2, 3), (3, 4), (2, 5), (3, 5), (4, 5)])
def test_chain_and_shift_relators_imply_each_other(n, m):
    ab, chains = chain_relators(n, m)
    _, shifts = shift_relators(n, m)
    delta = Word(ab, tuple(j % n + 1 for j in range(m)))
    # chains => shifts
    for i in range(1, n + 1):
        d = chain_implies_shift(n, m, i)
        check_derivation(d, chains)
        assert d.start == free_reduce(Word(ab, (i,)) * delta)
        assert d.end() == free_reduce(delta * Word(ab, ((i + m - 1) % n + 1,)))
    # shifts => chains (inductively, citing previously derived chains)
    for j, d in zip(range(2, n + 1), chain_from_shift_derivations(n, m)):
        check_derivation(d, shifts + chains[: j - 2])
        assert d.end() == delta


@pytest.mark.parametrize("n,m", [(2, 3), (3, 4), (2, 5)])
def test_rewritten_relators_are_chains_or_shifts(n, m):
    """Substituting closed forms into the raw rewritten relators leaves only
    toric relators and shift relators, up to rotation and inversion."""
    k = 2
    parent = pres.j_parent(k, n, m)
    table = closure_table(k, n, m)
    tr = schreier_transversal(table, toric_column_order(parent.alphabet))
    labels = toric_coset_labels(tr)
    rs = rs_presentation(parent, table, tr)
    from toricgroups.schreier import _s_alphabet
    from toricgroups.words import GenMap

    target = _s_alphabet(n)
    images = {}
    for g in rs.generators:
        i, j = labels[g.coset]
        if g.gen_name == "s":
            images[g.name] = closed_form_generator(k, n, m, "s", m - 1 - i, j + 1)
        elif g.gen_name == "u":
            images[g.name] = Word(target, ()) if j == 0 else closed_form_generator(k, n, m, "u", m - 1 - i, j)
        else:
            images[g.name] = Word(target, ())
    gm = GenMap.from_dict(rs.presentation.alphabet, target, images)
    allowed = {cyclic_canonical(Word(target, r.letters)) for r in pres.toric(k, n, m, normalize=False).relators}
    allowed |= {cyclic_canonical(Word(target, r.letters)) for r in shift_relators(n, m)[1]}
    allowed.add(())
    for r in rs.presentation.relators:
        assert cyclic_canonical(apply_map(gm, r)) in allowed


def test_delta_power_to_twist_derivation():
    for n, m in [(2, 3), (3, 4), (3, 5)]:
        ab, chains = chain_relators(n, m)
        d = delta_power_to_twist(n, m)
        check_derivation(d, chains)
        twist = Word(ab, tuple(i % n + 1 for i in range(n)) * m)
        assert d.end() == twist
