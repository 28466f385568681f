import pytest
from hypothesis import given, strategies as st

from conftest import triples
from neutrosophy import (
    ComponentError,
    EmptySubset,
    LiteralSyntaxError,
    NeutroTriple,
    OutOfRange,
    ParseError,
    format_triple,
    hr,
    is_paradoxist,
    is_tautological,
    ns_inf,
    ns_sup,
    parse_endpoint,
    parse_subset,
    parse_triple,
)
from neutrosophy.textio import parse_hyperreal


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1+", hr(1, 1)),
        ("0-", hr(0, -1)),
        ("2/5", hr("2/5")),
        ("0.3", hr("3/10")),
        ("1/2+3e", hr("1/2", 3)),
        ("1/2-1/4e", hr("1/2", "-1/4")),
        ("1⁺", hr(1, 1)),
        ("⁻0", hr(0, -1)),
        ("  0.25 ", hr("1/4")),
    ],
)
def test_parse_endpoint(text, expected):
    assert parse_endpoint(text) == expected


@pytest.mark.parametrize("text", ["2", "1+2e", "1.5", "0-2e"])
def test_parse_endpoint_out_of_range(text):
    with pytest.raises(OutOfRange):
        parse_endpoint(text)


def test_parse_hyperreal_unchecked():
    assert parse_hyperreal("3+3e") == hr(3, 3)
    assert parse_hyperreal("0-3e") == hr(0, -3)


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("x", 0), ("0.", 2), ("1/0", 2), ("1+2", 3), ("⁻0+", 2), ("0.5 7", 4)],
)
def test_endpoint_syntax_errors(text, offset):
    with pytest.raises(LiteralSyntaxError) as info:
        parse_endpoint(text)
    assert info.value.offset == offset


def test_parse_subset_examples():
    s = parse_subset("[0.2,0.4] U {0.7}")
    assert len(s.intervals) == 2
    assert ns_inf(s) == hr("0.2") and ns_sup(s) == hr("0.7")
    assert parse_subset("{1+}").is_singleton
    merged = parse_subset("[0.2,0.5] U [0.4,0.9]")
    assert merged == parse_subset("[0.2,0.9]")
    assert parse_subset("[[0.2,0.4], {0.7}]") == s
    assert parse_subset("{0.1, 0.3}") == parse_subset("{0.1} ∪ {0.3}")


@pytest.mark.parametrize("text", ["", "{}", "   "])
def test_parse_subset_empty(text):
    with pytest.raises(EmptySubset):
        parse_subset(text)


def test_reversed_interval_is_syntax_error():
    with pytest.raises(LiteralSyntaxError) as info:
        parse_subset("{0.1} U [0.5,0.2]")
    assert info.value.offset == 8


def test_parse_triple_examples():
    assert is_paradoxist(parse_triple("({1};{0.3};{1})"))
    assert is_tautological(parse_triple("({1+};{0-};{0-})"))
    assert parse_triple(" ( {0.2} ; [0.1,0.2] U {0.5} ; {0} ) ") == NeutroTriple.of("0.2", [("0.1", "0.2"), "0.5"], 0)


@pytest.mark.parametrize(
    "text, component, offset",
    [
        ("({0.2};{};{0.3})", "I", 7),
        ("(;{0};{0})", "T", 1),
        ("({0};{0};{2})", "F", 10),
        ("({0};{0.1 0.2};{0})", "I", 10),
    ],
)
def test_component_errors(text, component, offset):
    with pytest.raises(ComponentError) as info:
        parse_triple(text)
    assert info.value.component == component
    assert info.value.offset == offset


@pytest.mark.parametrize("text", ["{0};{0};{0})", "({0};{0};{0}", "({0};{0};{0}) x", "({0};{0})"])
def test_triple_structure_errors(text):
    with pytest.raises(ParseError):
        parse_triple(text)


def test_format_examples():
    assert format_triple(parse_triple("({1+};{0-};{0-})")) == "({1+};{0-};{0-})"
    assert format_triple(NeutroTriple.of("0.2", "0.1", "0.3")) == "({1/5};{1/10};{3/10})"
    assert format_triple(parse_triple("({0.7} U [0.1,0.2];{0};{0})")) == "([1/10,1/5] U {7/10};{0};{0})"


@given(triples)
def test_roundtrip(t):
    assert parse_triple(format_triple(t)) == t


@given(triples, st.data())
def test_error_offsets_point_inside_text(t, data):
    text = format_triple(t)
    cut = data.draw(st.integers(0, len(text) - 1))
    mangled = text[:cut] + "?" + text[cut + 1:]
    try:
        parse_triple(mangled)
    except ParseError as exc:
        assert 0 <= exc.offset <= len(mangled)
        # the reported token starts at or before the damage
        assert exc.offset <= cut or isinstance(exc, ComponentError)
