import pytest
from hypothesis import given, strategies as st

from toricgroups.words import (
    Alphabet,
    Derivation,
    GenMap,
    RewriteStep,
    Word,
    WordSyntaxError,
    apply_map,
    check_derivation,
    compose,
    cyclic_reduce,
    free_reduce,
    invert,
    parse_word,
    word_to_text,
)

AB = Alphabet(["x1", "x2", "x3"])


def w(text: str) -> Word:
    return AB.word(text)


letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=40)


def test_free_reduce_cancellation():
    assert free_reduce(w("x1 x1^-1 x2")) == w("x2")


def test_free_reduce_identity_case():
    assert free_reduce(w("1")) == w("1")
    assert w("1").letters == ()


def test_free_reduce_nested():
    assert free_reduce(w("x2 x1 x1^-1 x2^-1")).letters == ()


@given(letters)
def test_free_reduce_idempotent_and_shorter(ls):
    word = Word(AB, tuple(ls))
    once = free_reduce(word)
    assert free_reduce(once) == once
    assert len(once) <= len(word)
    assert once.is_reduced


def test_invert_examples():
    assert invert(w("x1 x2")) == w("x2^-1 x1^-1")
    assert invert(w("1")) == w("1")
    assert invert(invert(w("x1 x2^-1 x3"))) == w("x1 x2^-1 x3")


@given(letters)
def test_inverse_cancels(ls):
    word = Word(AB, tuple(ls))
    assert free_reduce(word * invert(word)).letters == ()


def test_cyclic_reduce():
    assert cyclic_reduce(w("x1 x2 x1^-1")) == w("x2")
    assert cyclic_reduce(w("x1 x2")) == w("x1 x2")


# --- text syntax -------------------------------------------------------------


def test_parse_exponents_expand():
    assert w("x1^3").letters == (1, 1, 1)
    assert w("x2^-2").letters == (-2, -2)


def test_parse_rejects_unknown_generator():
    with pytest.raises(WordSyntaxError):
        parse_word(AB, "zz")


def test_parse_rejects_zero_exponent():
    with pytest.raises(WordSyntaxError):
        parse_word(AB, "x1^0")


@given(letters)
def test_text_round_trip(ls):
    word = Word(AB, tuple(ls))
    assert parse_word(AB, word_to_text(word)) == word


# --- generator maps -----------------------------------------------------------


def sigma_23() -> GenMap:
    # x -> x1 x2 x1, y -> x1 x2 for (n, m) = (2, 3)
    src = Alphabet(["x", "y"])
    tgt = Alphabet(["x1", "x2"])
    return GenMap.from_dict(src, tgt, {"x": tgt.word("x1 x2 x1"), "y": tgt.word("x1 x2")})


def test_apply_map_substitution():
    f = sigma_23()
    assert apply_map(f, f.source.word("x")) == f.target.word("x1 x2 x1")
    assert apply_map(f, f.source.word("x y^-1")) == f.target.word("x1 x2 x1 x2^-1 x1^-1")


def test_apply_map_identity():
    ident = GenMap.identity(AB)
    assert apply_map(ident, w("x1 x2^-1 x3")) == w("x1 x2^-1 x3")


def test_apply_map_requires_known_generators():
    f = sigma_23()
    with pytest.raises(ValueError):
        apply_map(f, AB.word("x1"))


@given(letters, letters)
def test_apply_map_is_homomorphism(ls1, ls2):
    tgt = Alphabet(["a", "b"])
    f = GenMap.from_dict(AB, tgt, {"x1": tgt.word("a b"), "x2": tgt.word("b^-1"), "x3": tgt.word("a a")})
    u, v = Word(AB, tuple(ls1)), Word(AB, tuple(ls2))
    assert apply_map(f, u * v) == free_reduce(apply_map(f, u) * apply_map(f, v))


def test_compose_maps():
    tgt = Alphabet(["a", "b"])
    f = GenMap.from_dict(AB, tgt, {"x1": tgt.word("a"), "x2": tgt.word("b"), "x3": tgt.word("a b")})
    g = GenMap.from_dict(tgt, AB, {"a": AB.word("x1 x1"), "b": AB.word("x2")})
    gf = compose(g, f)
    word = w("x3 x1^-1")
    assert apply_map(gf, word) == apply_map(g, apply_map(f, word))


# --- derivations ---------------------------------------------------------------


def test_derivation_checker_accepts_valid_chain():
    rel = [free_reduce(w("x1 x2") * invert(w("x2 x3")))]  # says x1 x2 = x2 x3
    d = Derivation(w("x1 x2 x1"), (RewriteStep(0, w("x1 x2"), w("x2 x3"), 0),))
    check_derivation(d, rel)
    assert d.end() == w("x2 x3 x1")


def test_derivation_checker_rejects_wrong_citation():
    rel = [free_reduce(w("x1 x2") * invert(w("x2 x3")))]
    d = Derivation(w("x1 x2"), (RewriteStep(0, w("x1 x2"), w("x3 x2"), 0),))
    with pytest.raises(ValueError):
        check_derivation(d, rel)


def test_derivation_free_step():
    d = Derivation(w("x1"), (RewriteStep(1, w("1"), w("x2 x2^-1"), None),))
    check_derivation(d, [])
    assert free_reduce(d.end()) == w("x1")
