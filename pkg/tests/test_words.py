import pytest
from hypothesis import given, settings, strategies as st

from prosep.pcgroup import PcPresentation
from prosep.presentations import (
    FpPresentation,
    PresentationFormatError,
    parse_presentation,
    serialize_presentation,
)
from prosep.words import Word, WordSyntaxError, parse_word, serialize_word


class TestWordParsing:
    def test_commutator_expansion(self):
        w = parse_word("[a,b]")
        assert w.syllables == (("a", -1), ("b", -1), ("a", 1), ("b", 1))

    def test_trefoil_relator(self):
        assert parse_word("a^2*b^3").syllables == (("a", 2), ("b", 3))

    def test_inverse_of_product(self):
        assert parse_word("(a*b)^-1").syllables == (("b", -1), ("a", -1))

    def test_uppercase_shorthand(self):
        assert parse_word("A").syllables == (("a", -1),)
        assert parse_word("a*A").syllables == ()
        # a multi-character token is a single identifier, not shorthand
        assert parse_word("aA").syllables == (("aA", 1),)

    def test_whitespace_as_product(self):
        assert parse_word("a b c") == parse_word("a*b*c")

    def test_identity_forms(self):
        assert parse_word("1").is_identity()
        assert parse_word("a*a^-1").is_identity()

    def test_nested(self):
        w = parse_word("[a, [b, c]]^2")
        assert not w.is_identity()
        assert w.generators() == {"a", "b", "c"}

    def test_free_reduction_cascades(self):
        assert parse_word("a*b*b^-1*a^-1").is_identity()

    def test_syntax_errors(self):
        for bad in ("a^", "(a", "[a b]", "a^x", "a )", "&"):
            with pytest.raises(WordSyntaxError):
                parse_word(bad)

    def test_serialize_roundtrip_examples(self):
        for text in ("a^2*b^3", "[a,b]", "a*b^-2*a", "1"):
            w = parse_word(text)
            assert parse_word(serialize_word(w)) == w

    def test_serialization_never_uses_uppercase(self):
        assert serialize_word(parse_word("A*b")) == "a^-1*b"


word_strategy = st.lists(
    st.tuples(st.sampled_from("abcd"), st.integers(-5, 5)), max_size=8
).map(Word.from_syllables)


@settings(max_examples=100, deadline=None)
@given(word_strategy)
def test_roundtrip_property(w):
    assert parse_word(serialize_word(w)) == w


@settings(max_examples=100, deadline=None)
@given(word_strategy, word_strategy)
def test_word_group_laws(u, v):
    assert (u * v) * (v.inverse() * u.inverse()) == Word.identity()
    assert (u * u.inverse()).is_identity()


TREFOIL_FILE = """
kind: fp
name: trefoil
generators: a b
relator: a^2*b^3
"""

KLEIN_FILE = """
# fundamental group of the Klein bottle
kind: pc
name: klein-bottle
generators: b a
orders: 0 0
conj: a^b = a^-1
conj: a^B = a^-1
"""

BROKEN_PC_FILE = """
kind: pc
name: broken
generators: a b c
orders: 0 0 0
conj: b^a = b*c^-1
conj: b^A = b*c^-1
"""


class TestPresentationFiles:
    def test_parse_fp(self):
        fp = parse_presentation(TREFOIL_FILE)
        assert isinstance(fp, FpPresentation)
        assert fp.name == "trefoil"
        assert fp.rank == 2
        assert fp.relators[0] == parse_word("a^2 b^3")

    def test_parse_pc(self):
        pc = parse_presentation(KLEIN_FILE)
        assert isinstance(pc, PcPresentation)
        assert pc.hirsch_length() == 2
        assert pc.conjs[(0, 1, 1)] == (0, -1)
        assert pc.conjs[(0, 1, -1)] == (0, -1)

    def test_inconsistent_pc_rejected_with_overlap(self):
        with pytest.raises(PresentationFormatError) as exc:
            parse_presentation(BROKEN_PC_FILE)
        assert "overlap" in str(exc.value)

    def test_undeclared_generator_rejected(self):
        with pytest.raises(PresentationFormatError):
            parse_presentation("kind: fp\nname: x\ngenerators: a\nrelator: a*b")

    def test_fp_roundtrip(self):
        fp = parse_presentation(TREFOIL_FILE)
        again = parse_presentation(serialize_presentation(fp))
        assert again.generators == fp.generators
        assert again.relators == fp.relators

    def test_pc_roundtrip(self):
        pc = parse_presentation(KLEIN_FILE)
        again = parse_presentation(serialize_presentation(pc))
        assert again.orders == pc.orders
        assert again.conjs == pc.conjs
        assert again.powers == pc.powers

    def test_finite_pc_with_powers(self):
        text = """
kind: pc
name: z4
generators: g1 g2
orders: 2 2
power: g1^2 = g2
"""
        pc = parse_presentation(text)
        assert pc.group_order() == 4
        assert pc.powers[0] == (0, 1)
        again = parse_presentation(serialize_presentation(pc))
        assert again.powers == pc.powers
