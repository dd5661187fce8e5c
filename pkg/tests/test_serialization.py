import pytest

from weakhopf import identity_morphism, quantize, regular_module, transmute
from weakhopf.errors import ParseError
from weakhopf.serialization import (
    ParsedCocycle,
    ParsedQT,
    parse,
    serialize_cocycle,
    serialize_module,
    serialize_morphism,
    serialize_presentation,
    serialize_qt,
    serialize_quantum_groupoid,
    serialize_weak_bialgebra,
)


def test_algebra_round_trip(corpus):
    for fx in corpus:
        text = serialize_quantum_groupoid(fx.algebra)
        H2 = parse(text)
        assert serialize_quantum_groupoid(H2) == text
        assert H2.mul == fx.algebra.mul
        assert H2.antipode == fx.algebra.antipode


def test_weak_bialgebra_round_trip(diag2):
    text = serialize_weak_bialgebra(diag2.algebra.base)
    B = parse(text)
    assert serialize_weak_bialgebra(B) == text


def test_qt_and_cocycle_round_trip(corpus):
    for fx in corpus:
        text = serialize_qt(fx.algebra, fx.qt)
        pq = parse(text)
        assert isinstance(pq, ParsedQT)
        assert serialize_qt(fx.algebra, pq.structure) == text
        text = serialize_cocycle(fx.algebra, fx.cocycle)
        pc = parse(text)
        assert isinstance(pc, ParsedCocycle)
        assert serialize_cocycle(fx.algebra, pc.structure) == text


def test_morphism_round_trip(diag2):
    f = identity_morphism(diag2.algebra)
    text = serialize_morphism(f)
    pm = parse(text)
    assert pm.matrix == f.matrix
    rebuilt = serialize_morphism(
        type(f)(diag2.algebra, diag2.algebra, pm.matrix)
    )
    assert rebuilt == text


def test_module_round_trip(diag2):
    M = regular_module(diag2.algebra)
    text = serialize_module(M)
    pm = parse(text)
    M2 = pm.bind(diag2.algebra)
    assert [m.data for m in M2.mats] == [m.data for m in M.mats]
    assert serialize_module(M2) == text


def test_presentation_serialization_is_deterministic(diag2):
    p1 = transmute(diag2.algebra, diag2.qt)
    p2 = quantize(diag2.algebra, diag2.cocycle)
    assert serialize_presentation(p1) == serialize_presentation(p2)


DIAG2_PRESENTATION = """\
kind: presentation
acting-dim: 2
acting-basis: e1 e2
ambient-dim: 2
ambient-basis: e1 e2
carrier-dim: 2
carrier:
1 0
0 1
ht-dim: 2
ht:
1 0
0 1
action:
1 0 0 0
0 0 0 1
mul:
1 0
0 0
0 0
0 1
unit:
1 0
0 1
comul:
1 0 0 0
0 0 0 1
counit:
1 0
0 1
antipode:
1 0
0 1
"""


def test_presentation_golden_bytes(diag2):
    p = transmute(diag2.algebra, diag2.qt)
    assert serialize_presentation(p) == DIAG2_PRESENTATION


def test_parse_error_empty_section():
    with pytest.raises(ParseError) as err:
        parse("kind: weak-bialgebra\ndim: 1\nbasis: e\nmul:\n")
    assert err.value.line is not None


def test_parse_error_unknown_kind():
    with pytest.raises(ParseError):
        parse("kind: mystery\ndim: 1\nbasis: e\n")


def test_parse_error_unknown_field(diag2):
    text = serialize_quantum_groupoid(diag2.algebra)
    with pytest.raises(ParseError):
        parse(text + "extra: 1\n")


def test_parse_error_bad_rational(diag2):
    text = serialize_qt(diag2.algebra, diag2.qt)
    with pytest.raises(ParseError) as err:
        parse(text.replace("1 0 0 1", "1 0 x 1"))
    assert err.value.field == "r"


def test_parse_error_dimension_mismatch(diag2):
    text = serialize_qt(diag2.algebra, diag2.qt)
    with pytest.raises(ParseError):
        parse(text.replace("dim: 2", "dim: 3"))


from hypothesis import given, settings, strategies as st


@settings(max_examples=60)
@given(st.integers(min_value=0, max_value=4000))
def test_truncated_documents_never_crash(cut):
    # a damaged document either still parses or raises ParseError; nothing
    # else may escape
    from weakhopf import zoo

    text = serialize_quantum_groupoid(zoo.fixture("kd4").algebra)
    cut = min(cut, len(text))
    try:
        parse(text[:cut])
    except ParseError:
        pass
