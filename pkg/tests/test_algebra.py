import pytest

from weakhopf import (
    QuantumGroupoid,
    WeakBialgebra,
    check_quantum_groupoid,
    check_weak_bialgebra,
    convolve,
    epsilon_s,
    epsilon_t,
    solve_antipode,
    source_subalgebra,
    target_subalgebra,
)
from weakhopf.errors import AntipodeNotInvertible
from weakhopf.linalg import Matrix, Q0

ZERO2 = (Q0, Q0)


def rebuilt_without_antipode(H):
    return WeakBialgebra(H.basis_names, H.mul, H.unit, H.comul, H.counit)


def test_diag2_passes_all_axioms(diag2):
    assert check_weak_bialgebra(diag2.algebra.base).passed
    assert check_quantum_groupoid(diag2.algebra).passed


def test_broken_counit_fails_with_witness(diag2):
    H = diag2.algebra
    bad = WeakBialgebra(H.basis_names, H.mul, H.unit, H.comul, [0, 0])
    rep = check_weak_bialgebra(bad)
    assert not rep.passed
    failing = rep["counit-axiom"]
    assert not failing.passed
    assert failing.witness is not None
    assert failing.witness.indices == (0,)


def test_pair_groupoid_passes(pair2):
    assert check_weak_bialgebra(pair2.algebra.base).passed
    assert check_quantum_groupoid(pair2.algebra).passed


def test_epsilon_t_values(diag2, kz2, pair2):
    N = diag2.algebra
    for i in range(2):
        assert epsilon_t(N, N.basis_vector(i)) == N.basis_vector(i)
    Z = kz2.algebra
    assert epsilon_t(Z, Z.basis_vector(1)) == Z.unit
    P = pair2.algebra
    names = P.basis_names
    e12 = P.basis_vector(names.index("e12"))
    e11 = P.basis_vector(names.index("e11"))
    assert epsilon_t(P, e12) == e11


def test_subalgebras(diag2, kz2, pair2):
    assert target_subalgebra(diag2.algebra).dim == 2
    assert source_subalgebra(diag2.algebra).dim == 2
    zt = target_subalgebra(kz2.algebra)
    assert zt.dim == 1 and zt.contains(kz2.algebra.unit)
    pt = target_subalgebra(pair2.algebra)
    names = pair2.algebra.basis_names
    assert pt.dim == 2
    assert pt.contains(pair2.algebra.basis_vector(names.index("e11")))
    assert pt.contains(pair2.algebra.basis_vector(names.index("e22")))
    assert not pt.contains(pair2.algebra.basis_vector(names.index("e12")))


def test_subalgebra_closure_under_product(corpus):
    for fx in corpus:
        H = fx.algebra
        for basis in (target_subalgebra(H), source_subalgebra(H)):
            assert basis.contains(H.unit)
            for x in basis.vectors:
                for y in basis.vectors:
                    assert basis.contains(H.mul_elem(x, y))


def test_convolution_identities(diag2, kz2, corpus):
    N = diag2.algebra
    ident = Matrix.identity(N.dim)
    assert convolve(N, ident, N.antipode) == N.eps_t_mat
    Z = kz2.algebra
    conv = convolve(Z, Matrix.identity(Z.dim), Z.antipode)
    rank_one = Matrix.from_columns(
        [tuple(Z.counit[i] * u for u in Z.unit) for i in range(Z.dim)], Z.dim
    )
    assert conv == rank_one
    for fx in corpus:
        H = fx.algebra
        S = H.antipode
        ident = Matrix.identity(H.dim)
        assert convolve(H, S, convolve(H, ident, S)) == S


def test_solve_antipode_examples(diag2, kz2, pair2):
    assert solve_antipode(rebuilt_without_antipode(diag2.algebra)) == Matrix.identity(2)
    assert solve_antipode(rebuilt_without_antipode(kz2.algebra)) == Matrix.identity(2)
    S = solve_antipode(rebuilt_without_antipode(pair2.algebra))
    # transpose map e_ij -> e_ji
    names = pair2.algebra.basis_names
    for i, name in enumerate(names):
        flipped = "e" + name[2] + name[1]
        expected = pair2.algebra.basis_vector(names.index(flipped))
        assert S.column(i) == expected


def test_solve_antipode_oracle_equivalence(corpus):
    for fx in corpus:
        S = solve_antipode(rebuilt_without_antipode(fx.algebra))
        assert S == fx.algebra.antipode, fx.name


def test_negated_antipode_fails(diag2):
    H = diag2.algebra
    bad = QuantumGroupoid(H.base, Matrix.identity(2).scale(-1))
    rep = check_quantum_groupoid(bad)
    assert not rep.passed
    failing = rep["antipode-right-convolution"]
    assert not failing.passed
    assert failing.witness.indices == (0,)


def test_kd4_inverse_antipode_passes(kd4):
    assert check_quantum_groupoid(kd4.algebra).passed


def test_singular_antipode_rejected(diag2):
    H = diag2.algebra
    with pytest.raises(AntipodeNotInvertible):
        QuantumGroupoid(H.base, Matrix.zero(2, 2))


def test_commutativity_flags(diag2, kd4, pair2):
    assert diag2.algebra.is_cocommutative and diag2.algebra.is_commutative
    assert kd4.algebra.is_cocommutative and not kd4.algebra.is_commutative
    assert pair2.algebra.is_cocommutative


def test_epsilon_idempotence(corpus):
    for fx in corpus:
        H = fx.algebra
        assert H.eps_t_mat * H.eps_t_mat == H.eps_t_mat
        assert H.eps_s_mat * H.eps_s_mat == H.eps_s_mat


def test_bar_counital_maps_formulas(corpus):
    # bar eps_s(h) = eps(h 1_1) 1_2 and bar eps_t(h) = 1_1 eps(1_2 h),
    # recomputed by brute force from the coproduct of 1
    from weakhopf import epsilon_s_bar, epsilon_t_bar

    for fx in corpus:
        H = fx.algebra
        n = H.dim
        for i in range(n):
            e = H.basis_vector(i)
            sbar = [Q0] * n
            tbar = [Q0] * n
            for (a, b), c in H.delta_one_sparse.items():
                sbar[b] += c * H.counit_of(H.mul_elem(e, H.basis_vector(a)))
                tbar[a] += c * H.counit_of(H.mul_elem(H.basis_vector(b), e))
            assert epsilon_s_bar(H, e) == tuple(sbar)
            assert epsilon_t_bar(H, e) == tuple(tbar)


def test_target_membership_characterization(corpus):
    # Delta(eps_t(h)) = 1_1 eps_t(h) (x) 1_2 and dually for the source map
    for fx in corpus:
        H = fx.algebra
        n = H.dim
        for i in range(n):
            z = epsilon_t(H, H.basis_vector(i))
            lhs = H.comul_of(z)
            rhs = [Q0] * (n * n)
            for (a, b), c in H.delta_one_sparse.items():
                prod = H.mul_elem(H.basis_vector(a), z)
                for p, cp in enumerate(prod):
                    if cp:
                        rhs[p * n + b] += c * cp
            assert lhs == tuple(rhs)
            y = epsilon_s(H, H.basis_vector(i))
            lhs = H.comul_of(y)
            rhs = [Q0] * (n * n)
            for (a, b), c in H.delta_one_sparse.items():
                prod = H.mul_elem(y, H.basis_vector(b))
                for q, cq in enumerate(prod):
                    if cq:
                        rhs[a * n + q] += c * cq
            assert lhs == tuple(rhs)
