import pytest

from weakhopf import (
    alpha_map,
    canonical_r,
    check_conjugator_coproduct,
    regular_module,
    tensor_action_identification,
    twist,
    verify_isomorphism,
)
from weakhopf.errors import PreconditionUnmet
from weakhopf.serialization import serialize_presentation
from weakhopf.structures import QTStructure, swap2
from weakhopf.zoo import trivial_cocycle


def test_twist_at_the_trivial_point_is_structural_identity(kd4):
    H = kd4.algebra
    pair = twist(H, kd4.qt, trivial_cocycle(H))
    twisted = pair.algebra
    assert twisted.mul == H.mul
    assert twisted.comul == H.comul
    assert twisted.unit == H.unit
    assert twisted.counit == H.counit
    assert twisted.antipode == H.antipode
    assert pair.qt.r == kd4.qt.r


def test_twisted_diag2_equals_original(diag2):
    # the diagonal fixture twists to itself, with the same quasitriangular
    # structure
    H = diag2.algebra
    pair = twist(H, diag2.qt, diag2.cocycle)
    assert pair.algebra.comul == H.comul
    assert pair.algebra.antipode == H.antipode
    assert pair.qt.r == diag2.qt.r
    assert pair.qt.rinv == diag2.qt.rinv


def test_twisted_kd4_is_genuinely_different(kd4):
    H = kd4.algebra
    pair = twist(H, kd4.qt, kd4.cocycle)
    assert pair.algebra.comul != H.comul
    # the twisted quasitriangular structure is F21^-1 F, which is not 1 (x) 1
    f21inv = swap2(H, kd4.cocycle.finv)
    expected = H.mul2(f21inv, kd4.cocycle.f)
    assert pair.qt.r == expected
    assert pair.qt.r != kd4.qt.r


def test_twisted_antipode_conjugation(corpus):
    # the twisted antipode is conjugation by v; twist() has already
    # asserted all axioms, so the checkers accept the result
    from weakhopf import check_quantum_groupoid, check_quasitriangular

    for fx in corpus:
        pair = twist(fx.algebra, fx.qt, fx.cocycle)
        assert check_quantum_groupoid(pair.algebra).passed
        assert check_quasitriangular(pair.algebra, pair.qt).passed


def test_conjugator_coproduct_on_corpus(corpus):
    for fx in corpus:
        assert check_conjugator_coproduct(fx.algebra, fx.cocycle).passed


def test_alpha_identity_on_diag2(diag2):
    alpha, alpha_inv = alpha_map(diag2.algebra, diag2.qt, diag2.cocycle)
    assert alpha.is_identity() and alpha_inv.is_identity()


def test_alpha_identity_for_trivial_cocycle(kd4):
    alpha, alpha_inv = alpha_map(
        kd4.algebra, kd4.qt, trivial_cocycle(kd4.algebra)
    )
    assert alpha.is_identity() and alpha_inv.is_identity()


def test_alpha_invertible_on_kd4(kd4):
    alpha, alpha_inv = alpha_map(kd4.algebra, kd4.qt, kd4.cocycle)
    assert (alpha * alpha_inv).is_identity()
    assert (alpha_inv * alpha).is_identity()


def test_alpha_requires_canonical_structure(kd4):
    H = kd4.algebra
    bad = QTStructure(
        tuple(2 * c for c in canonical_r(H).r),
        tuple(c / 2 for c in canonical_r(H).rinv),
    )
    with pytest.raises(PreconditionUnmet):
        alpha_map(H, bad, kd4.cocycle)


def test_verify_isomorphism_corpus(corpus):
    for fx in corpus:
        res = verify_isomorphism(fx.algebra, fx.qt, fx.cocycle)
        assert res.report.passed, (
            fx.name,
            [c.name for c in res.report.failed_checks()],
        )
        names = [c.name for c in res.report.checks]
        for expected in (
            "module-map",
            "algebra-map",
            "unit-map",
            "coalgebra-map",
            "counit-map",
            "antipode-map",
            "bijectivity",
        ):
            assert expected in names


def test_presentations_byte_identical_on_diag2(diag2):
    res = verify_isomorphism(diag2.algebra, diag2.qt, diag2.cocycle)
    left = serialize_presentation(res.quantized)
    right = serialize_presentation(res.twisted_transmuted)
    assert left == right
    assert res.quantized.structurally_equal(res.twisted_transmuted)


def test_presentations_differ_on_kd4(kd4):
    res = verify_isomorphism(kd4.algebra, kd4.qt, kd4.cocycle)
    assert not res.quantized.structurally_equal(res.twisted_transmuted)
    # structural equality and byte equality of the serialized form agree
    left = serialize_presentation(res.quantized)
    right = serialize_presentation(res.twisted_transmuted)
    assert left != right


def test_carrier_equality_under_twist(corpus):
    from weakhopf import centralizer

    for fx in corpus:
        pair = twist(fx.algebra, fx.qt, fx.cocycle)
        assert centralizer(fx.algebra) == centralizer(pair.algebra)


def test_tensor_action_identification(corpus):
    for fx in corpus:
        M = regular_module(fx.algebra)
        rep = tensor_action_identification(fx.algebra, fx.cocycle, M, M)
        assert rep.passed, fx.name


def test_twist_rejects_corrupt_cocycle(kd4):
    from weakhopf.errors import WeakHopfError
    from weakhopf.structures import WeakCocycle

    f = list(kd4.cocycle.f)
    f[0] += 1
    with pytest.raises(WeakHopfError):
        twist(kd4.algebra, kd4.qt, WeakCocycle(tuple(f), kd4.cocycle.finv))


def test_isomorphism_on_mixed_direct_sums(diag2, kz2, pair2):
    # weak instances with the nontrivial cocycle on the ordinary block
    from weakhopf import canonical_r as _canonical
    from weakhopf.zoo import direct_sum, direct_sum_cocycle

    for left, right in ((diag2, kz2), (pair2, kz2)):
        A, B = left.algebra, right.algebra
        H = direct_sum(A, B)
        qt = _canonical(H)
        wc = direct_sum_cocycle(H, A, B, left.cocycle, right.cocycle)
        res = verify_isomorphism(H, qt, wc)
        assert res.report.passed, [
            c.name for c in res.report.failed_checks()
        ]
