from __future__ import annotations

import pytest

from modradical.instance import (
    ParseError,
    format_vec,
    parse_instance,
    parse_ring_descriptor,
    render_instance,
)


def test_parse_minimal_instance():
    inst = parse_instance("ring Z/4\nmodule rank=1 relations=[]\nsubmodule N gens=[]")
    assert inst.ring.descriptor == "Z/4"
    assert inst.module.element_count == 4
    assert inst.submodules["N"].members == ((0,),)


def test_parse_plane_instance():
    inst = parse_instance(
        "ring Z/4\nmodule rank=2 relations=[]\nsubmodule N gens=[(2,0)]")
    assert inst.module.element_count == 16
    assert set(inst.submodules["N"].members) == {(0, 0), (2, 0)}


def test_parse_vector_length_mismatch_reports_location():
    text = "ring Z/4\nmodule rank=2 relations=[]\nsubmodule N gens=[(1,2,3)]"
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert err.value.line == 3
    assert "rank is 2" in err.value.message


def test_parse_scalar_out_of_range():
    with pytest.raises(ParseError) as err:
        parse_instance("ring Z/4\nmodule rank=1 relations=[(7)]")
    assert err.value.line == 2
    assert "out of range" in err.value.message


def test_parse_duplicate_name():
    text = ("ring Z/4\nmodule rank=1 relations=[]\n"
            "submodule N gens=[]\nsubmodule N gens=[(2)]")
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert err.value.line == 4 and "duplicate name" in err.value.message


def test_parse_unknown_ring():
    with pytest.raises(ParseError) as err:
        parse_instance("ring Q\nmodule rank=1 relations=[]")
    assert err.value.line == 1


def test_parse_requires_ring_before_module():
    with pytest.raises(ParseError):
        parse_instance("module rank=1 relations=[]\nring Z/4")


def test_parse_comments_and_blank_lines():
    text = """
# instance with torsion
ring Z/6   # the base ring
module rank=1 relations=[(3)]

submodule N gens=[]   # zero
element m = (2)
"""
    inst = parse_instance(text)
    assert inst.module.element_count == 3
    assert inst.elements["m"].rep == (2,)


def test_parse_gf_descriptor_and_coefficient_scalars():
    inst = parse_instance(
        "ring GF(4) poly=[1,1,1]\nmodule rank=1 relations=[]\n"
        "element a = ([0,1])\nelement b = (3)")
    assert inst.ring.size == 4
    assert inst.elements["a"].rep == (2,)  # x has code 2
    assert inst.elements["b"].rep == (3,)


def test_parse_gf_requires_poly_for_proper_extensions():
    with pytest.raises(ParseError) as err:
        parse_instance("ring GF(4)\nmodule rank=1 relations=[]")
    assert "poly" in err.value.message


def test_parse_product_descriptor():
    inst = parse_instance(
        "ring product(Z/2, Z/4)\nmodule rank=1 relations=[]\nsubmodule N gens=[(3)]")
    assert inst.ring.size == 8
    assert inst.ring.descriptor == "product(Z/2, Z/4)"


def test_parse_nested_product_with_gf():
    ring = parse_ring_descriptor("product(GF(4) poly=[1,1,1], Z/3)")
    assert ring.size == 12


def test_round_trip_is_identity_on_declarations():
    texts = [
        "ring Z/4\nmodule rank=1 relations=[]\nsubmodule N gens=[]",
        "ring Z/4\nmodule rank=2 relations=[]\nsubmodule N gens=[(2,0)]",
        "ring Z/6\nmodule rank=2 relations=[(2,0),(0,3)]\n"
        "submodule A gens=[(1,0)]\nsubmodule B gens=[(0,2),(1,1)]\nelement m = (1,2)",
        "ring GF(4) poly=[1,1,1]\nmodule rank=1 relations=[]\nsubmodule N gens=[(2)]",
        "ring product(Z/2, Z/4)\nmodule rank=1 relations=[(4)]\nsubmodule N gens=[(2)]",
    ]
    for text in texts:
        first = parse_instance(text)
        rendered = render_instance(first)
        second = parse_instance(rendered)
        assert second.ring == first.ring
        assert second.module == first.module
        assert list(second.submodules) == list(first.submodules)
        for name in first.submodules:
            assert second.submodules[name].member_indices == \
                first.submodules[name].member_indices
            assert second.submodules[name].generator_indices == \
                first.submodules[name].generator_indices
        assert {n: e.rep for n, e in second.elements.items()} == \
            {n: e.rep for n, e in first.elements.items()}
        assert render_instance(second) == rendered


def test_parse_rank_zero_module():
    inst = parse_instance("ring Z/4\nmodule rank=0 relations=[]\nsubmodule N gens=[()]")
    assert inst.module.element_count == 1
    assert inst.submodules["N"].members == ((),)


def test_format_vec():
    assert format_vec((0, 2)) == "(0,2)"
    assert format_vec(()) == "()"
    assert format_vec((3,)) == "(3)"
