import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idealspaces import (
    CapExceeded,
    FiniteRing,
    IdealSpacesError,
    InvalidSize,
    ParseError,
    is_isomorphic,
    make_product,
    make_zmod,
    parse_ring_expression,
)


def test_plain_zmod():
    R = parse_ring_expression("Z12")
    assert R.size == 12 and R.label == "Z12"


def test_triple_product():
    R = parse_ring_expression("Z2xZ2xZ2")
    assert R.size == 8
    assert len(R.components) == 3
    assert R.name(1) == "(1,0,0)"


def test_quotient():
    assert is_isomorphic(parse_ring_expression("Z12/(4)"), make_zmod(4))


def test_localization():
    assert is_isomorphic(parse_ring_expression("Z12@(2)"), make_zmod(3))


def test_quotient_of_product_with_tuple_gens():
    R = parse_ring_expression("Z6xZ6/((2,2))")
    assert R.size == 4
    assert is_isomorphic(R, make_product([make_zmod(2), make_zmod(2)]))


def test_postfix_chain():
    # localize Z12/(4) ~ Z4 at closure{3} = {1,3}; 3*3=9=1 mod 4, e=1, copy of Z4
    R = parse_ring_expression("Z12/(4)@(3)")
    assert is_isomorphic(R, make_zmod(4))


def test_whitespace_and_label_normalization():
    R = parse_ring_expression(" Z6 x Z6 ")
    assert R.label == "Z6xZ6"


def test_malformed():
    for bad in ("Zx", "", "Q5", "Z12/(", "Z12)(", "Z12/(4)x", "Z4/((1,2))"):
        with pytest.raises(ParseError):
            parse_ring_expression(bad)


def test_size_errors_propagate():
    with pytest.raises(InvalidSize):
        parse_ring_expression("Z1")
    with pytest.raises(CapExceeded):
        parse_ring_expression("Z65")


def test_mod_reduction_of_generators():
    # generators are reduced mod the ring size
    a = parse_ring_expression("Z12/(16)")
    b = parse_ring_expression("Z12/(4)")
    assert a.size == b.size == 4


@given(st.text(alphabet="Zx/@(),0123456789 ", max_size=18))
@settings(max_examples=120, deadline=None)
def test_fuzz_never_crashes(text):
    # arbitrary input yields a ring or a package error, never anything else
    try:
        ring = parse_ring_expression(text)
    except IdealSpacesError:
        return
    assert isinstance(ring, FiniteRing)
    assert ring.label == "".join(text.split())
