import pytest

from toricgroups import presentations as pres
from toricgroups.presentations import (
    FamilyParams,
    ParameterError,
    ParseError,
    Presentation,
    TietzeBudgetExceeded,
    build,
    parse_presentation,
    serialize,
    tietze_simplify,
)

def test_toric_234_matches_display():
    p = pres.toric(2, 3, 4)
    assert p.gens == ("x1", "x2", "x3")
    texts = [str(r) for r in p.relators]
    assert texts[:3] == ["x1^2", "x2^2", "x3^2"]
    # x1 x2 x3 x1 = x2 x3 x1 x2 and = x3 x1 x2 x3, anchored at the first word
    assert texts[3] == "x1 x2 x3 x1 x2^-1 x1^-1 x3^-1 x2^-1"
    assert texts[4] == "x1 x2 x3 x1 x3^-1 x2^-1 x1^-1 x3^-1"


def test_torus_standard_23():
    p = pres.torus_standard(2, 3)
    assert p.gens == ("x", "y")
    assert [str(r) for r in p.relators] == ["x^2 y^-3"]


def test_alt_plus_relators():
    p = pres.alt_plus(2, 3, 5)
    assert [str(r) for r in p.relators] == ["a^2", "b^3", "b a^-1 b a^-1 b a^-1 b a^-1 b a^-1"]


def test_torus_dual_gen_count():
    p = pres.torus_dual(2, 3)
    assert len(p.gens) == 3
    assert len(p.relators) == 2


def test_relator_counts_across_families():
    for n, m in [(2, 3), (3, 4), (2, 5), (3, 5), (4, 5)]:
        for k in (2, 3, 5):
            toric = pres.toric(k, n, m)
            assert len(toric.relators) == len(toric.gens) + (len(toric.gens) - 1)
            assert all(r.is_reduced and r.letters for r in toric.relators)
    assert len(pres.coxeter_triangle(4, 2, 3).relators) == 6
    assert len(pres.j_parent(2, 3, 4).relators) == 5


def test_toric_normalizes_n_greater_m():
    assert pres.toric(2, 4, 3) == pres.toric(2, 3, 4)
    assert pres.toric(2, 4, 3, normalize=False).gens == ("x1", "x2", "x3", "x4")


def test_parameter_domain_errors():
    with pytest.raises(ParameterError):
        pres.toric(2, 4, 6)  # gcd
    with pytest.raises(ParameterError):
        pres.toric(1, 2, 3)  # label < 2
    with pytest.raises(ParameterError):
        FamilyParams("nonsense", (2, 3))
    with pytest.raises(ParameterError):
        FamilyParams("toric", (2, 3))  # arity


def test_build_dispatch_matches_constructors():
    assert build(FamilyParams("toric", (2, 3, 4))) == pres.toric(2, 3, 4)
    assert build(FamilyParams("j-parent", (2, 3, 3))) == pres.j_parent(2, 3, 3)
    assert build(FamilyParams("alt-toric", (3, 2, 3))) == pres.alt_toric(3, 2, 3)


# --- file format ----------------------------------------------------------------


def test_parse_equality_chain():
    p = parse_presentation("gens: x y\nrel: x^2 = y^3")
    assert p == pres.torus_standard(2, 3)


def test_parse_single_relator_and_comments():
    p = parse_presentation("# cyclic group\ngens: a\nrel: a^3  # order three\n")
    assert p.gens == ("a",)
    assert [str(r) for r in p.relators] == ["a^3"]


def test_parse_malformed_equality():
    with pytest.raises(ParseError) as err:
        parse_presentation("gens: x\nrel: x = ")
    assert err.value.line == 2


def test_parse_reports_line_of_unknown_generator():
    with pytest.raises(ParseError) as err:
        parse_presentation("gens: x\nrel: x\nrel: q")
    assert err.value.line == 3


def test_round_trip_every_family():
    for params in [
        FamilyParams("torus-standard", (2, 3)),
        FamilyParams("torus-classical", (3, 4)),
        FamilyParams("torus-dual", (2, 5)),
        FamilyParams("toric", (3, 2, 3)),
        FamilyParams("j-parent", (2, 3, 5)),
        FamilyParams("coxeter-triangle", (6, 2, 3)),
        FamilyParams("alt-plus", (2, 3, 7)),
        FamilyParams("alt-toric", (2, 3, 5)),
    ]:
        p = build(params)
        assert parse_presentation(serialize(p)) == p


# --- Tietze ---------------------------------------------------------------------


def test_tietze_eliminates_defined_generator():
    p = parse_presentation("gens: x y\nrel: y x^-2")
    q = tietze_simplify(p)
    assert q.gens == ("x",)
    assert q.relators == ()


def test_tietze_fixed_point_on_toric():
    p = pres.toric(2, 3, 4)
    assert tietze_simplify(p) == p


def test_tietze_drops_trivial_and_duplicate_relators():
    p = parse_presentation("gens: a b\nrel: a b b^-1 a^-1\nrel: a^2\nrel: a^2\nrel: b a^-1")
    q = tietze_simplify(p)
    # lowest index first: a is defined by the last relator and eliminated
    assert q.gens == ("b",)
    assert [str(r) for r in q.relators] == ["b^2"]


def test_tietze_budget_signal_carries_best():
    p = parse_presentation("gens: a b c\nrel: a b^-1\nrel: b c^-1\nrel: c^5")
    with pytest.raises(TietzeBudgetExceeded) as err:
        tietze_simplify(p, budget=1)
    best = err.value.best
    assert isinstance(best, Presentation)
    assert len(best.gens) == 2  # one elimination happened before the signal


def test_tietze_preserves_group_order_on_finite_rows(finite_rows):
    from toricgroups.cosets import group_order

    for k, n, m in finite_rows[:4]:
        p = pres.toric(k, n, m)
        assert group_order(tietze_simplify(p)) == group_order(p)
