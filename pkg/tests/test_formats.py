import json
import random

import pytest
from hypothesis import given, strategies as st

from qtb.algebra import AlgElement, Basis, Kind, d, d1, e
from qtb.cohomology import DerivationTable, inner_derivation
from qtb.formats import (FormatError, dump_element, dump_table, dump_tensor, parse_element, parse_table,
                         parse_tensor)
from qtb.laurent import q_pow
from qtb.sampling import rand_element, rand_table, rand_tensor2, rand_tensor3
from qtb.tensor import Tensor3Element, otimes

seeds = st.integers(0, 2 ** 32)


def test_element_examples():
    assert parse_element('{"terms":[{"kind":"d","coeff":"1"}]}') == d
    x = parse_element('{"terms":[{"kind":"e","index":[1,0],"coeff":"q^2"},{"kind":"d1","coeff":"1"}]}')
    assert x == e(1, 0).scale(q_pow(2)) + d1
    # canonical order puts d1 before e
    assert dump_element(x) == '{"terms":[{"kind":"d1","coeff":"1"},{"kind":"e","index":[1,0],"coeff":"q^2"}]}'


def test_g_at_origin_is_zero():
    assert parse_element('{"terms":[{"kind":"g","index":[0,0],"coeff":"3"}]}').is_zero()
    t = parse_tensor('{"terms":[{"left":{"kind":"h","index":[0,0]},"right":{"kind":"d"},"coeff":"1"}]}')
    assert t.is_zero()


def test_duplicate_terms_are_summed():
    x = parse_element('{"terms":[{"kind":"d","coeff":"1"},{"kind":"d","coeff":"q"}]}')
    assert x == d.scale(q_pow(1) + 1)


def test_bad_coefficient_column():
    text = '{"terms":[{"kind":"d","coeff":"q^"}]}'
    with pytest.raises(FormatError) as info:
        parse_element(text)
    err = info.value
    assert err.line == 1
    # the column points just past "q^" inside the string
    assert text[err.column - 1] == '"' and text[err.column - 3:err.column - 1] == "q^"


@pytest.mark.parametrize("text,line,column", [
    ('{"terms":[{"kind":"x","coeff":"1"}]}', 1, 19),
    ('{"terms":[{"kind":"e","coeff":"1"}]}', 1, 11),
    ('{"terms":[{"kind":"d","index":[0,0],"coeff":"1"}]}', 1, 11),
    ('{"terms":[{"kind":"e","index":[1,true],"coeff":"1"}]}', 1, 31),
    ('{"terms":[{"kind":"d"}]}', 1, 11),
    ('{"terms":[{"kind":"d","coeff":1}]}', 1, 11),
    ('{"terms":{}}', 1, 10),
    ('{"terms":[]', 1, 12),
    ('{\n"terms":[],\n"terms":[]}', 1, 1),
    ('{"terms":[],"extra":1}', 1, 1),
    ('{"terms":[\n  {"kind":"d","coeff":"1+"}]}', 2, 26),
])
def test_element_errors(text, line, column):
    with pytest.raises(FormatError) as info:
        parse_element(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith("line %d, column %d: " % (line, column))


def test_tensor_errors():
    with pytest.raises(FormatError, match="unexpected key 'coeff' in left"):
        parse_tensor('{"terms":[{"left":{"kind":"d","coeff":"1"},"right":{"kind":"d"},"coeff":"1"}]}')
    with pytest.raises(FormatError, match="3-fold"):
        parse_tensor('{"terms":[{"left":{"kind":"d"},"right":{"kind":"d"},"coeff":"1"}]}', 3)
    with pytest.raises(FormatError, match="2-fold"):
        parse_tensor('{"terms":[{"left":{"kind":"d"},"mid":{"kind":"d"},"right":{"kind":"d"},"coeff":"1"}]}', 2)


def test_tensor_arity():
    assert isinstance(parse_tensor('{"terms":[]}', 3), Tensor3Element)
    t = parse_tensor('{"terms":[{"left":{"kind":"d"},"mid":{"kind":"d1"},"right":{"kind":"d"},"coeff":"2"}]}')
    assert t == otimes(d, d1, d).scale(2)


def test_table_format():
    t = inner_derivation(otimes(e(1, 0), d), 1)
    text = dump_table(t)
    doc = json.loads(text)
    assert doc["window"] == 1
    assert {"basis", "image"} == set(doc["assignments"][0])
    assert parse_table(text) == t
    with pytest.raises(FormatError, match="duplicate assignment"):
        parse_table('{"window":1,"assignments":[{"basis":{"kind":"d"},"image":{"terms":[]}},'
                    '{"basis":{"kind":"d"},"image":{"terms":[]}}]}')
    with pytest.raises(FormatError, match="not a basis vector"):
        parse_table('{"window":1,"assignments":[{"basis":{"kind":"g","index":[0,0]},"image":{"terms":[]}}]}')
    with pytest.raises(FormatError, match="window"):
        parse_table('{"window":-1,"assignments":[]}')
    assert parse_table('{"window":0,"assignments":[]}') == DerivationTable({}, 0)


@given(seeds)
def test_round_trips(seed):
    rng = random.Random(seed)
    for value, dump, parse in [
        (rand_element(rng, 3, denominators=True), dump_element, parse_element),
        (rand_tensor2(rng, 3, denominators=True), dump_tensor, lambda s: parse_tensor(s, 2)),
        (rand_tensor3(rng, 3, denominators=True), dump_tensor, lambda s: parse_tensor(s, 3)),
        (rand_table(rng, 3), dump_table, parse_table),
    ]:
        text = dump(value)
        back = parse(text)
        assert back == value
        assert dump(back) == text


def test_basis_zero_element():
    assert dump_element(AlgElement.zero()) == '{"terms":[]}'
    assert parse_element('{"terms":[]}').is_zero()
    assert AlgElement.from_key(Basis(Kind.D)) == d
