import pytest

from weakhopf import (
    canonical_r,
    check_quantum_groupoid,
    check_quasitriangular,
    check_weak_bialgebra,
    check_weak_cocycle,
    target_subalgebra,
)
from weakhopf.errors import InvalidGroupoid, NotABicharacter
from weakhopf.zoo import (
    GroupoidSpec,
    bicharacter_cocycle,
    cyclic_group_algebra,
    dihedral_group_algebra,
    direct_sum,
    direct_sum_cocycle,
    direct_sum_qt,
    fixture_names,
    groupoid_algebra,
    trivial_cocycle,
)


def test_identity_groupoid_gives_the_diagonal_algebra():
    H = groupoid_algebra(GroupoidSpec.identity_groupoid(2))
    assert H.dim == 2
    assert H.mul[0][0][0] == 1 and H.mul[0][1] == (0, 0)
    assert H.unit == (1, 1)


def test_cyclic_group_algebra_is_ordinary():
    H = cyclic_group_algebra(2)
    assert H.delta_one[0] == 1 and sum(1 for c in H.delta_one if c) == 1
    assert target_subalgebra(H).dim == 1


def test_pair_groupoid_antipode_is_transpose():
    H = groupoid_algebra(GroupoidSpec.pair_groupoid(2))
    names = H.basis_names
    for i, name in enumerate(names):
        flipped = "e" + name[2] + name[1]
        assert H.antipode.column(i) == H.basis_vector(names.index(flipped))


def test_invalid_groupoid_reports_entry():
    spec = GroupoidSpec.identity_groupoid(2)
    broken = GroupoidSpec(
        spec.objects,
        spec.arrows,
        {("e1", "e1"): "e1", ("e1", "e2"): "e1", ("e2", "e2"): "e2"},
        spec.inverses,
    )
    with pytest.raises(InvalidGroupoid) as err:
        groupoid_algebra(broken)
    assert "e1" in str(err.value)


def test_bicharacter_trivial_on_kz2():
    H = cyclic_group_algebra(2)
    wc = bicharacter_cocycle(H, [1], [[1, 1], [1, 1]])
    one_one = [0] * (H.dim * H.dim)
    one_one[0] = 1
    assert wc.f == tuple(one_one)


def test_bicharacter_sign_on_kz2(kz2):
    # F = 1 (x) 1 - 2 e- (x) e- has halves on every group pair
    from fractions import Fraction

    f = kz2.cocycle.f
    half = Fraction(1, 2)
    assert f == (half, half, half, -half)
    assert check_weak_cocycle(kz2.algebra, kz2.cocycle).passed


def test_bicharacter_rejects_non_multiplicative(kd4):
    H = kd4.algebra
    names = list(H.basis_names)
    gens = [names.index("s"), names.index("r2s")]
    beta = [[1, 1, 1, 1], [1, -1, 1, 1], [1, 1, 1, 1], [1, 1, 1, -1]]
    with pytest.raises(NotABicharacter):
        bicharacter_cocycle(H, gens, beta)


def test_bicharacter_rejects_non_involution(kd4):
    H = kd4.algebra
    names = list(H.basis_names)
    beta = [[1, 1], [1, -1]]
    with pytest.raises(NotABicharacter):
        bicharacter_cocycle(H, [names.index("r")], beta)


def test_direct_sum_target_dimension(diag2, kz2):
    H = direct_sum(diag2.algebra, kz2.algebra)
    assert H.dim == 4
    assert target_subalgebra(H).dim == 3
    assert check_weak_bialgebra(H.base).passed
    assert check_quantum_groupoid(H).passed


def test_direct_sum_block_structures(diag2, kz2):
    A, B = diag2.algebra, kz2.algebra
    H = direct_sum(A, B)
    qt = direct_sum_qt(H, A, B, diag2.qt, kz2.qt)
    assert check_quasitriangular(H, qt).passed
    wc = direct_sum_cocycle(H, A, B, diag2.cocycle, kz2.cocycle)
    assert check_weak_cocycle(H, wc).passed
    # blockwise cocommutativity
    assert H.is_cocommutative == (A.is_cocommutative and B.is_cocommutative)


def test_direct_sum_weakness(kd4_diag2):
    # Delta(1) has three terms, so the coproduct of 1 is not 1 (x) 1
    H = kd4_diag2.algebra
    assert sum(1 for c in H.delta_one if c) == 3
    one_one = [0] * (H.dim * H.dim)
    one_one[0] = 1
    assert H.delta_one != tuple(one_one)


def test_fixture_registry(corpus):
    assert len(fixture_names()) >= 5
    for fx in corpus:
        assert check_weak_bialgebra(fx.algebra.base).passed
        assert check_quantum_groupoid(fx.algebra).passed
        assert check_quasitriangular(fx.algebra, fx.qt).passed
        assert check_weak_cocycle(fx.algebra, fx.cocycle).passed
        assert fx.qt.r == canonical_r(fx.algebra).r


def test_groupoid_algebras_are_cocommutative():
    for spec in (
        GroupoidSpec.identity_groupoid(3),
        GroupoidSpec.pair_groupoid(2),
    ):
        H = groupoid_algebra(spec)
        assert H.is_cocommutative
        qt = canonical_r(H)
        assert check_quasitriangular(H, qt).passed


def test_dimension_one_boundary():
    # the trivial group algebra is the smallest quantum groupoid
    H = cyclic_group_algebra(1)
    assert H.dim == 1
    assert check_weak_bialgebra(H.base).passed
    assert check_quantum_groupoid(H).passed
    qt = canonical_r(H)
    assert check_quasitriangular(H, qt).passed
    wc = trivial_cocycle(H)
    assert check_weak_cocycle(H, wc).passed


def test_dihedral_table():
    H = dihedral_group_algebra(4)
    names = H.basis_names
    r = names.index("r")
    s = names.index("s")
    rs = names.index("rs")
    r3s = names.index("r3s")
    # r s = rs, s r = r^-1 s = r3s
    assert H.mul[r][s][rs] == 1
    assert H.mul[s][r][r3s] == 1


def test_klein_four_bicharacter_has_quarters():
    # full pairing on Z2 x Z2: the cocycle coefficients live in quarters
    names = ["e", "a", "b", "ab"]
    bits = {"e": 0, "a": 1, "b": 2, "ab": 3}
    inv = {v: k for k, v in bits.items()}
    table = {
        (x, y): inv[bits[x] ^ bits[y]] for x in names for y in names
    }
    H = groupoid_algebra(GroupoidSpec.from_group(names, table))
    beta = [
        [(-1) ** bin(v & w).count("1") for w in range(4)] for v in range(4)
    ]
    wc = bicharacter_cocycle(H, [1, 2], beta)
    from fractions import Fraction

    quarters = {Fraction(0), Fraction(1, 4), Fraction(-1, 4)}
    assert set(wc.f) <= quarters
    assert check_weak_cocycle(H, wc).passed
