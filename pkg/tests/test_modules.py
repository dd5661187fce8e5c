import pytest

from weakhopf import (
    BraidContext,
    braiding_phi,
    braiding_psi,
    check_module,
    coherence_report,
    ht_module,
    quantize,
    regular_module,
    truncated_tensor,
    unitors,
)
from weakhopf.errors import MismatchedAlgebra
from weakhopf.linalg import Q0
from weakhopf.modules import _flip_matrix


def test_truncated_dimensions(diag2, kz2, pair2):
    M = regular_module(diag2.algebra)
    assert truncated_tensor(M, M).dim == 2
    M = regular_module(kz2.algebra)
    assert truncated_tensor(M, M).dim == 4
    M = regular_module(pair2.algebra)
    tt = truncated_tensor(M, M)
    assert tt.dim == tt.projector.rank()


def test_projector_idempotent(corpus):
    for fx in corpus:
        M = regular_module(fx.algebra)
        tt = truncated_tensor(M, M)
        assert tt.projector * tt.projector == tt.projector
        tw = truncated_tensor(M, M, "twisted", fx.cocycle)
        assert tw.projector * tw.projector == tw.projector


def test_mismatched_algebras_rejected(diag2, kz2):
    with pytest.raises(MismatchedAlgebra):
        truncated_tensor(regular_module(diag2.algebra), regular_module(kz2.algebra))


def test_induced_action_is_module(corpus):
    for fx in corpus:
        M = regular_module(fx.algebra)
        tt = truncated_tensor(M, M)
        assert check_module(tt.module).passed


def test_unit_object_action(corpus):
    for fx in corpus:
        ht, zmod = ht_module(fx.algebra)
        assert check_module(zmod).passed


def test_unitors_on_diag2(diag2):
    H = diag2.algebra
    M = regular_module(H)
    ctx = BraidContext.psi(H, diag2.qt)
    l, r, t_l, t_r = unitors(M, ctx)
    # l(e_i (x) e_j) = delta_ij e_i on plain coordinates
    for bidx in range(t_l.dim):
        w = t_l.inclusion.column(bidx)
        expect = [Q0] * H.dim
        for flat, c in enumerate(w):
            if c:
                zi, vj = divmod(flat, M.dim)
                z = ht_module(H)[0].vectors[zi]
                prod = H.mul_elem(z, H.basis_vector(vj))
                for k, ck in enumerate(prod):
                    expect[k] += c * ck
        assert l.column(bidx) == tuple(expect)
    # with S = id on a commutative algebra, r agrees with l across the flip
    flip = _flip_matrix(t_r.left.dim, t_r.right.dim)
    lifted = l * t_l.projection * flip * t_r.inclusion
    assert r == lifted


def test_unitor_is_identity_for_ordinary_hopf(kz2):
    # the target subalgebra is spanned by 1, so l(1 (x) v) = v
    H = kz2.algebra
    M = regular_module(H)
    ctx = BraidContext.psi(H, kz2.qt)
    l, r, t_l, t_r = unitors(M, ctx)
    assert l.is_identity()
    assert r.is_identity()


def test_unitors_h_linear_everywhere(corpus):
    for fx in corpus:
        H = fx.algebra
        M = regular_module(H)
        for ctx in (BraidContext.psi(H, fx.qt), BraidContext.phi(H, fx.cocycle)):
            l, r, t_l, t_r = unitors(M, ctx)
            for h in range(H.dim):
                assert l * t_l.module.mats[h] == M.mats[h] * l
                assert r * t_r.module.mats[h] == M.mats[h] * r


def test_braiding_psi_examples(diag2, kd4):
    # diagonal R: the braiding fixes e_i (x) e_i
    H = diag2.algebra
    M = regular_module(H)
    psi, psi_inv = braiding_psi(diag2.qt, M, M)
    assert psi.is_identity()
    # R = 1 (x) 1: the braiding is the plain flip
    H = kd4.algebra
    M = regular_module(H)
    t_mn = truncated_tensor(M, M)
    psi, psi_inv = braiding_psi(kd4.qt, M, M, (t_mn, t_mn))
    flip = t_mn.projection * _flip_matrix(M.dim, M.dim) * t_mn.inclusion
    assert psi == flip


def test_braiding_invertibility_and_linearity(corpus):
    for fx in corpus:
        H = fx.algebra
        M = regular_module(H)
        t_mn = truncated_tensor(M, M)
        psi, psi_inv = braiding_psi(fx.qt, M, M, (t_mn, t_mn))
        assert (psi * psi_inv).is_identity() and (psi_inv * psi).is_identity()
        for h in range(H.dim):
            assert psi * t_mn.module.mats[h] == t_mn.module.mats[h] * psi
        tw = truncated_tensor(M, M, "twisted", fx.cocycle)
        phi, phi_inv = braiding_phi(fx.cocycle, M, M, (tw, tw))
        assert (phi * phi_inv).is_identity() and (phi_inv * phi).is_identity()
        for h in range(H.dim):
            assert phi * tw.module.mats[h] == tw.module.mats[h] * phi


def test_braiding_phi_examples(diag2, kd4):
    # trivial cocycle on an ordinary Hopf algebra: the plain flip
    from weakhopf.zoo import trivial_cocycle

    H = kd4.algebra
    M = regular_module(H)
    wc = trivial_cocycle(H)
    tw = truncated_tensor(M, M, "twisted", wc)
    phi, _ = braiding_phi(wc, M, M, (tw, tw))
    flip = tw.projection * _flip_matrix(M.dim, M.dim) * tw.inclusion
    assert phi == flip
    # diagonal cocycle on the diagonal algebra: identity on the image
    N = diag2.algebra
    MN = regular_module(N)
    phi, _ = braiding_phi(diag2.cocycle, MN, MN)
    assert phi.is_identity()


def test_phi_squares_to_identity_on_adjoint(kd4):
    # a cocycle twist of a cocommutative algebra gives a symmetric braiding
    p = quantize(kd4.algebra, kd4.cocycle)
    phi, _ = braiding_phi(kd4.cocycle, p.action, p.action)
    assert (phi * phi).is_identity()


def test_braiding_naturality(corpus):
    # right multiplications are endomorphisms of the left regular module
    for fx in corpus:
        H = fx.algebra
        M = regular_module(H)
        f = H.right_mult(H.basis_vector(H.dim - 1))
        g = H.right_mult(H.basis_vector(0))
        t_mn = truncated_tensor(M, M)
        psi, _ = braiding_psi(fx.qt, M, M, (t_mn, t_mn))
        fg = t_mn.projection * _kron(f, g) * t_mn.inclusion
        gf = t_mn.projection * _kron(g, f) * t_mn.inclusion
        assert gf * psi == psi * fg


def _kron(a, b):
    from weakhopf.linalg import kron

    return kron(a, b)


def test_coherence_small_fixtures(diag2, kz2, pair2):
    for fx in (diag2, kz2, pair2):
        M = regular_module(fx.algebra)
        rep = coherence_report(BraidContext.psi(fx.algebra, fx.qt), M, M, M)
        assert rep.passed, (fx.name, [c.name for c in rep.failed_checks()])
        rep = coherence_report(BraidContext.phi(fx.algebra, fx.cocycle), M, M, M)
        assert rep.passed, (fx.name, [c.name for c in rep.failed_checks()])
