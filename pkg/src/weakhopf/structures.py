"""Quasitriangular structures and weak invertible unit 2-cocycles.

Both live in H (x) H as dim^2 coefficient vectors.  The checkers verify
the defining conditions plus the derived identity suites; the construction
helpers (Drinfeld element, canonical structure on a cocommutative algebra,
twist elements) validate the identities they rely on instead of assuming
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .algebra import (
    QuantumGroupoid,
    dense_of_sparse,
    sparse_embed,
    sparse_mul,
    sparse_of_dense,
)
from .errors import (
    DimensionMismatch,
    InconsistentStructure,
    NonUniqueSolution,
    NotCocommutative,
    UNotInvertible,
)
from .linalg import Matrix, Q0, Q1, vec
from .report import VerificationReport, Witness, comparison


@dataclass(frozen=True)
class QTStructure:
    r: Tuple
    rinv: Tuple

    def __post_init__(self):
        object.__setattr__(self, "r", vec(self.r))
        object.__setattr__(self, "rinv", vec(self.rinv))
        if len(self.r) != len(self.rinv):
            raise DimensionMismatch("R and its inverse differ in length")


@dataclass(frozen=True)
class WeakCocycle:
    f: Tuple
    finv: Tuple

    def __post_init__(self):
        object.__setattr__(self, "f", vec(self.f))
        object.__setattr__(self, "finv", vec(self.finv))
        if len(self.f) != len(self.finv):
            raise DimensionMismatch("F and its inverse differ in length")


@dataclass(frozen=True)
class DrinfeldElement:
    u: Tuple
    u_inv: Tuple


@dataclass(frozen=True)
class TwistElements:
    """Conjugator v and its named inverse, with v * v^{-1} recorded.

    The product is recorded rather than asserted to equal 1: nothing
    downstream uses invertibility of v directly.
    """

    v: Tuple
    v_inv: Tuple
    product: Tuple


def swap2(H, x2) -> tuple:
    n = H.dim
    out = [Q0] * (n * n)
    for flat, c in enumerate(x2):
        if c:
            a, b = divmod(flat, n)
            out[b * n + a] += c
    return tuple(out)


def element2_sparse(H, x2):
    return sparse_of_dense(x2, H.dim, 2)


def tensor_id_embed(H, x2, slots, k) -> dict:
    """x2 placed at the two given slots of H^(x)k, unit elsewhere (sparse)."""
    return sparse_embed(element2_sparse(H, x2), k, slots, H.unit_sparse)


def _coproduct_leg(H, x2, which) -> dict:
    """(Delta (x) id) or (id (x) Delta) of a dense 2-tensor, sparse 3-tensor."""
    n = H.dim
    out = {}
    for flat, c in enumerate(x2):
        if not c:
            continue
        a, b = divmod(flat, n)
        if which == "left":
            for (p, q), c2 in H.comul_cols[a].items():
                key = (p, q, b)
                out[key] = out.get(key, Q0) + c * c2
        else:
            for (p, q), c2 in H.comul_cols[b].items():
                key = (a, p, q)
                out[key] = out.get(key, Q0) + c * c2
    return {k: v for k, v in out.items() if v}


def coproduct_tensor_left(H, x2) -> dict:
    return _coproduct_leg(H, x2, "left")


def coproduct_tensor_right(H, x2) -> dict:
    return _coproduct_leg(H, x2, "right")


def apply_to_leg(H, mat: Matrix, x2, leg) -> tuple:
    """(mat (x) id) or (id (x) mat) applied to a dense 2-tensor."""
    n = H.dim
    out = [Q0] * (n * n)
    for flat, c in enumerate(x2):
        if not c:
            continue
        a, b = divmod(flat, n)
        if leg == 0:
            for p, cp in enumerate(mat.column(a)):
                if cp:
                    out[p * n + b] += c * cp
        else:
            for p, cp in enumerate(mat.column(b)):
                if cp:
                    out[a * n + p] += c * cp
    return tuple(out)


# ---------------------------------------------------------------------------
# quasitriangular checks


def check_quasitriangular(H: QuantumGroupoid, qt: QTStructure) -> VerificationReport:
    rep = VerificationReport("quasitriangular")
    n = H.dim
    if len(qt.r) != n * n:
        raise DimensionMismatch("R has wrong length for this algebra")
    r, rinv = qt.r, qt.rinv
    d1 = H.delta_one
    d1c = H.delta_cop_one

    sandwich = H.mul2(H.mul2(d1c, r), d1)
    comparison(rep, "r-sandwich", [((), sandwich, r)],
               "Delta_cop(1) R Delta(1) vs R")
    sandwich = H.mul2(H.mul2(d1, rinv), d1c)
    comparison(rep, "rinv-sandwich", [((), sandwich, rinv)],
               "Delta(1) R^-1 Delta_cop(1) vs R^-1")
    comparison(rep, "r-invertibility-left", [((), H.mul2(r, rinv), d1c)],
               "R R^-1 vs Delta_cop(1)")
    comparison(rep, "r-invertibility-right", [((), H.mul2(rinv, r), d1)],
               "R^-1 R vs Delta(1)")

    rs = element2_sparse(H, r)
    r13 = sparse_embed(rs, 3, (0, 2), H.unit_sparse)
    r12 = sparse_embed(rs, 3, (0, 1), H.unit_sparse)
    r23 = sparse_embed(rs, 3, (1, 2), H.unit_sparse)
    lhs = coproduct_tensor_right(H, r)
    rhs = sparse_mul(H, r13, r12, 3)
    comparison(
        rep,
        "coproduct-second-leg",
        [((), dense_of_sparse(lhs, n, 3), dense_of_sparse(rhs, n, 3))],
        "(id (x) Delta)R vs R13 R12",
    )
    lhs = coproduct_tensor_left(H, r)
    rhs = sparse_mul(H, r13, r23, 3)
    comparison(
        rep,
        "coproduct-first-leg",
        [((), dense_of_sparse(lhs, n, 3), dense_of_sparse(rhs, n, 3))],
        "(Delta (x) id)R vs R13 R23",
    )

    def intertwiner_pairs():
        for i in range(n):
            di = H.comul_map.column(i)
            yield (i,), H.mul2(swap2(H, di), r), H.mul2(r, di)

    comparison(rep, "intertwiner", intertwiner_pairs(),
               "Delta_cop(h) R vs R Delta(h)")
    return rep


def derived_r_identities(H: QuantumGroupoid, qt: QTStructure) -> VerificationReport:
    """The full derived identity list for a valid quasitriangular structure."""
    from .algebra import source_subalgebra, target_subalgebra

    rep = VerificationReport("r-identities")
    n = H.dim
    r, rinv = qt.r, qt.rinv
    ht = target_subalgebra(H)
    hs = source_subalgebra(H)
    S = H.antipode
    Sinv = H.antipode_inv

    def emb2(x, y):
        # dense 2-tensor x (x) y from two dense elements
        out = [Q0] * (n * n)
        for a, ca in enumerate(x):
            if ca:
                for b, cb in enumerate(y):
                    if cb:
                        out[a * n + b] += ca * cb
        return tuple(out)

    one = H.unit

    def ht_pairs(name, lhs_fn, rhs_fn):
        comparison(
            rep,
            name,
            (((i,), lhs_fn(z), rhs_fn(z)) for i, z in enumerate(ht.vectors)),
        )

    def hs_pairs(name, lhs_fn, rhs_fn):
        comparison(
            rep,
            name,
            (((i,), lhs_fn(y), rhs_fn(y)) for i, y in enumerate(hs.vectors)),
        )

    ht_pairs(
        "target-right-exchange",
        lambda z: H.mul2(emb2(one, z), r),
        lambda z: H.mul2(r, emb2(z, one)),
    )
    hs_pairs(
        "source-left-exchange",
        lambda y: H.mul2(emb2(y, one), r),
        lambda y: H.mul2(r, emb2(one, y)),
    )
    ht_pairs(
        "target-antipode-left",
        lambda z: H.mul2(emb2(z, one), r),
        lambda z: H.mul2(emb2(one, S.apply(z)), r),
    )
    hs_pairs(
        "source-antipode-right",
        lambda y: H.mul2(emb2(one, y), r),
        lambda y: H.mul2(emb2(S.apply(y), one), r),
    )
    ht_pairs(
        "target-antipode-inverse",
        lambda z: H.mul2(r, emb2(one, z)),
        lambda z: H.mul2(r, emb2(Sinv.apply(z), one)),
    )
    hs_pairs(
        "source-antipode-inverse",
        lambda y: H.mul2(r, emb2(y, one)),
        lambda y: H.mul2(r, emb2(one, Sinv.apply(y))),
    )

    comparison(rep, "source-marginal-first-leg",
               [((), apply_to_leg(H, H.eps_s_mat, r, 0), H.delta_one)],
               "(eps_s (x) id)R vs Delta(1)")
    comparison(rep, "source-marginal-second-leg",
               [((), apply_to_leg(H, H.eps_s_mat, r, 1),
                 apply_to_leg(H, S, H.delta_cop_one, 0))],
               "(id (x) eps_s)R vs (S (x) id)Delta_cop(1)")
    comparison(rep, "target-marginal-first-leg",
               [((), apply_to_leg(H, H.eps_t_mat, r, 0), H.delta_cop_one)],
               "(eps_t (x) id)R vs Delta_cop(1)")
    comparison(rep, "target-marginal-second-leg",
               [((), apply_to_leg(H, H.eps_t_mat, r, 1),
                 apply_to_leg(H, S, H.delta_one, 0))],
               "(id (x) eps_t)R vs (S (x) id)Delta(1)")
    comparison(rep, "antipode-first-leg",
               [((), apply_to_leg(H, S, r, 0), rinv)],
               "(S (x) id)R vs R^-1")
    comparison(rep, "antipode-inverse-second-leg",
               [((), apply_to_leg(H, Sinv, r, 1), rinv)],
               "(id (x) S^-1)R vs R^-1")
    comparison(rep, "antipode-both-legs",
               [((), apply_to_leg(H, S, apply_to_leg(H, S, r, 0), 1), r)],
               "(S (x) S)R vs R")
    return rep


def _drinfeld_raw(H, qt):
    n = H.dim
    u = [Q0] * n
    u_inv = [Q0] * n
    s2 = H.antipode * H.antipode
    for flat, c in enumerate(qt.r):
        if not c:
            continue
        a, b = divmod(flat, n)
        term = H.mul_elem(H.antipode.column(b), H.basis_vector(a))
        for k, ck in enumerate(term):
            if ck:
                u[k] += c * ck
        term = H.mul_elem(H.basis_vector(b), s2.column(a))
        for k, ck in enumerate(term):
            if ck:
                u_inv[k] += c * ck
    return tuple(u), tuple(u_inv)


def drinfeld_element(H: QuantumGroupoid, qt: QTStructure) -> DrinfeldElement:
    """u = S(R^(2)) R^(1) with inverse R^(2) S^2(R^(1)).

    Verifies invertibility, the conjugation identity S^2 = u (.) u^-1, and
    the coproduct formula for u; a failure means the input was not a valid
    quasitriangular structure.
    """
    u, u_inv = _drinfeld_raw(H, qt)
    if H.mul_elem(u, u_inv) != H.unit or H.mul_elem(u_inv, u) != H.unit:
        raise UNotInvertible("u u^-1 != 1; input is not quasitriangular")
    rep = drinfeld_identities(H, qt)
    if not rep.passed:
        raise InconsistentStructure(
            "derived identity %r fails" % rep.failed_checks()[0].name
        )
    return DrinfeldElement(u, u_inv)


def drinfeld_identities(H: QuantumGroupoid, qt: QTStructure) -> VerificationReport:
    """u invertible, S^2 = u (.) u^-1, and the coproduct formula for u."""
    rep = VerificationReport("drinfeld")
    u, u_inv = _drinfeld_raw(H, qt)
    if H.mul_elem(u, u_inv) != H.unit or H.mul_elem(u_inv, u) != H.unit:
        rep.add("u-invertible", False,
                Witness((), H.mul_elem(u, u_inv), H.unit,
                        "u u^-1 vs 1"))
        return rep
    rep.add("u-invertible", True)

    s2 = H.antipode * H.antipode
    conj = H.left_mult(u) * H.right_mult(u_inv)
    rep.add(
        "square-antipode-conjugation",
        s2 == conj,
        None
        if s2 == conj
        else Witness((), tuple(s2.data[0]), tuple(conj.data[0]),
                     "S^2 vs conjugation by u (first rows)"),
    )

    n = H.dim
    du = H.comul_of(u)
    uu = [Q0] * (n * n)
    for a, ca in enumerate(u):
        if ca:
            for b, cb in enumerate(u):
                if cb:
                    uu[a * n + b] += ca * cb
    rinv21 = swap2(H, qt.rinv)
    rhs = H.mul2(H.mul2(qt.rinv, rinv21), tuple(uu))
    comparison(rep, "coproduct-of-u", [((), du, rhs)],
               "Delta(u) vs R^-1 R21^-1 (u (x) u)")
    return rep


def canonical_r(H: QuantumGroupoid) -> QTStructure:
    """R = Delta_cop(1) Delta(1) for a cocommutative quantum groupoid."""
    if not H.is_cocommutative:
        raise NotCocommutative("canonical structure needs a cocommutative coproduct")
    r = H.mul2(H.delta_cop_one, H.delta_one)
    rinv = H.mul2(H.delta_one, H.delta_cop_one)
    return QTStructure(r, rinv)


# ---------------------------------------------------------------------------
# weak invertible unit 2-cocycles


def check_weak_cocycle(H: QuantumGroupoid, wc: WeakCocycle) -> VerificationReport:
    from .algebra import source_subalgebra, target_subalgebra

    rep = VerificationReport("cocycle")
    n = H.dim
    if len(wc.f) != n * n:
        raise DimensionMismatch("F has wrong length for this algebra")
    f, finv = wc.f, wc.finv
    d1 = H.delta_one
    d1c = H.delta_cop_one

    comparison(rep, "f-sandwich",
               [((), H.mul2(H.mul2(d1, f), d1c), f)],
               "Delta(1) F Delta_cop(1) vs F")
    comparison(rep, "finv-sandwich",
               [((), H.mul2(H.mul2(d1c, finv), d1), finv)],
               "Delta_cop(1) F^-1 Delta(1) vs F^-1")
    comparison(rep, "f-invertibility-left", [((), H.mul2(f, finv), d1)],
               "F F^-1 vs Delta(1)")
    comparison(rep, "f-invertibility-right", [((), H.mul2(finv, f), d1c)],
               "F^-1 F vs Delta_cop(1)")

    fs = element2_sparse(H, f)
    fis = element2_sparse(H, finv)
    f12 = sparse_embed(fs, 3, (0, 1), H.unit_sparse)
    f23 = sparse_embed(fs, 3, (1, 2), H.unit_sparse)
    fi12 = sparse_embed(fis, 3, (0, 1), H.unit_sparse)
    fi23 = sparse_embed(fis, 3, (1, 2), H.unit_sparse)
    df_l = coproduct_tensor_left(H, f)
    df_r = coproduct_tensor_right(H, f)
    dfi_l = coproduct_tensor_left(H, finv)
    dfi_r = coproduct_tensor_right(H, finv)

    lhs = sparse_mul(H, df_l, f12, 3)
    rhs = sparse_mul(H, df_r, f23, 3)
    comparison(rep, "cocycle-equation",
               [((), dense_of_sparse(lhs, n, 3), dense_of_sparse(rhs, n, 3))],
               "((Delta (x) id)F)F12 vs ((id (x) Delta)F)F23")

    ht = target_subalgebra(H)
    hs = source_subalgebra(H)
    one = H.unit
    Sinv = H.antipode_inv

    def emb2(x, y):
        out = [Q0] * (n * n)
        for a, ca in enumerate(x):
            if ca:
                for b, cb in enumerate(y):
                    if cb:
                        out[a * n + b] += ca * cb
        return tuple(out)

    comparison(rep, "source-second-leg",
               (((i,), H.mul2(emb2(one, y), f), H.mul2(f, emb2(y, one)))
                for i, y in enumerate(hs.vectors)),
               "(1 (x) y)F vs F(y (x) 1)")
    comparison(rep, "target-first-leg",
               (((i,), H.mul2(emb2(z, one), f), H.mul2(f, emb2(one, z)))
                for i, z in enumerate(ht.vectors)),
               "(z (x) 1)F vs F(1 (x) z)")
    comparison(rep, "finv-source",
               (((i,), H.mul2(finv, emb2(one, y)), H.mul2(emb2(y, one), finv))
                for i, y in enumerate(hs.vectors)),
               "F^-1(1 (x) y) vs (y (x) 1)F^-1")
    comparison(rep, "finv-target",
               (((i,), H.mul2(finv, emb2(z, one)), H.mul2(emb2(one, z), finv))
                for i, z in enumerate(ht.vectors)),
               "F^-1(z (x) 1) vs (1 (x) z)F^-1")
    comparison(rep, "finv-source-antipode",
               (((i,), H.mul2(emb2(one, y), finv),
                 H.mul2(emb2(Sinv.apply(y), one), finv))
                for i, y in enumerate(hs.vectors)),
               "(1 (x) y)F^-1 vs (S^-1(y) (x) 1)F^-1")
    comparison(rep, "f-target-antipode",
               (((i,), H.mul2(f, emb2(z, one)),
                 H.mul2(f, emb2(one, Sinv.apply(z))))
                for i, z in enumerate(ht.vectors)),
               "F(z (x) 1) vs F(1 (x) S^-1(z))")

    # equivalent forms of the cocycle equation, checked rather than assumed
    lhs = sparse_mul(H, f23, fi12, 3)
    rhs = sparse_mul(H, dfi_r, df_l, 3)
    comparison(rep, "cocycle-form-mixed-left",
               [((), dense_of_sparse(lhs, n, 3), dense_of_sparse(rhs, n, 3))],
               "F23 F^-1_12 vs ((id (x) Delta)F^-1)((Delta (x) id)F)")
    lhs = sparse_mul(H, f12, fi23, 3)
    rhs = sparse_mul(H, dfi_l, df_r, 3)
    comparison(rep, "cocycle-form-mixed-right",
               [((), dense_of_sparse(lhs, n, 3), dense_of_sparse(rhs, n, 3))],
               "F12 F^-1_23 vs ((Delta (x) id)F^-1)((id (x) Delta)F)")
    lhs = sparse_mul(H, fi23, dfi_r, 3)
    rhs = sparse_mul(H, fi12, dfi_l, 3)
    comparison(rep, "cocycle-form-inverse",
               [((), dense_of_sparse(lhs, n, 3), dense_of_sparse(rhs, n, 3))],
               "F^-1_23 (id (x) Delta)F^-1 vs F^-1_12 (Delta (x) id)F^-1")
    return rep


def twist_elements(H: QuantumGroupoid, wc: WeakCocycle) -> TwistElements:
    """v = F^-(1) S(F^-(2)) and v^-1 = S(F^(1)) F^(2).

    The coproduct law Delta(v^-1) = ((S (x) S)(F21^-1))(v^-1 (x) v^-1)F^-1
    is verified exactly; a failure means the cocycle input is inconsistent.
    """
    v, v_inv, product = conjugator_elements(H, wc)
    lhs, rhs = conjugator_coproduct_sides(H, wc, v_inv)
    if lhs != rhs:
        raise InconsistentStructure(
            "coproduct law for the twist conjugator fails; invalid cocycle"
        )
    return TwistElements(v, v_inv, product)


def conjugator_elements(H: QuantumGroupoid, wc: WeakCocycle):
    """(v, v^-1, v v^-1) without any verification; the product is
    informational only."""
    n = H.dim
    v = [Q0] * n
    v_inv = [Q0] * n
    for flat, c in enumerate(wc.finv):
        if not c:
            continue
        a, b = divmod(flat, n)
        term = H.mul_elem(H.basis_vector(a), H.antipode.column(b))
        for k, ck in enumerate(term):
            if ck:
                v[k] += c * ck
    for flat, c in enumerate(wc.f):
        if not c:
            continue
        a, b = divmod(flat, n)
        term = H.mul_elem(H.antipode.column(a), H.basis_vector(b))
        for k, ck in enumerate(term):
            if ck:
                v_inv[k] += c * ck
    v = tuple(v)
    v_inv = tuple(v_inv)
    return v, v_inv, H.mul_elem(v, v_inv)


def conjugator_coproduct_sides(H, wc, v_inv=None):
    """Both sides of Delta(v^-1) = ((S (x) S)(F21^-1))(v^-1 (x) v^-1)F^-1."""
    n = H.dim
    if v_inv is None:
        v_inv = [Q0] * n
        for flat, c in enumerate(wc.f):
            if not c:
                continue
            a, b = divmod(flat, n)
            term = H.mul_elem(H.antipode.column(a), H.basis_vector(b))
            for k, ck in enumerate(term):
                if ck:
                    v_inv[k] += c * ck
        v_inv = tuple(v_inv)
    lhs = H.comul_of(v_inv)
    ss_f21inv = apply_to_leg(
        H, H.antipode, apply_to_leg(H, H.antipode, swap2(H, wc.finv), 0), 1
    )
    vv = [Q0] * (n * n)
    for a, ca in enumerate(v_inv):
        if ca:
            for b, cb in enumerate(v_inv):
                if cb:
                    vv[a * n + b] += ca * cb
    rhs = H.mul2(H.mul2(ss_f21inv, tuple(vv)), wc.finv)
    return lhs, rhs


# ---------------------------------------------------------------------------
# inverse solving (inverses may be supplied or solved)


def _solve_sandwiched_inverse(H, x2, left_target, right_target, left_sand, right_sand):
    """Find Y in the sandwich left_sand (H (x) H) right_sand with
    x2 Y = left_target and Y x2 = right_target."""
    n = H.dim
    nn = n * n
    lmul = Matrix.zero(nn, nn)
    rmul = Matrix.zero(nn, nn)
    for j in range(nn):
        col = [Q0] * nn
        col[j] = Q1
        for flat, c in enumerate(H.mul2(x2, tuple(col))):
            lmul.data[flat][j] = c
        for flat, c in enumerate(H.mul2(tuple(col), x2)):
            rmul.data[flat][j] = c
    sand = Matrix.zero(nn, nn)
    for j in range(nn):
        col = [Q0] * nn
        col[j] = Q1
        val = H.mul2(H.mul2(left_sand, tuple(col)), right_sand)
        for flat, c in enumerate(val):
            sand.data[flat][j] = c
    ident = Matrix.identity(nn)
    rows = lmul.data + rmul.data + (sand - ident).data
    rhs = list(left_target) + list(right_target) + [Q0] * nn
    system = Matrix([row[:] for row in rows], 3 * nn, nn)
    try:
        sol = system.solve(rhs, unique=True)
    except NonUniqueSolution as exc:
        raise InconsistentStructure(
            "inverse is not unique inside the sandwich subspace"
        ) from exc
    if sol is None:
        raise InconsistentStructure("no inverse exists in the sandwich subspace")
    return tuple(sol)


def solve_qt_inverse(H: QuantumGroupoid, r) -> QTStructure:
    """Solve for R^-1 in Delta(1)(H (x) H)Delta_cop(1)."""
    rinv = _solve_sandwiched_inverse(
        H, vec(r), H.delta_cop_one, H.delta_one, H.delta_one, H.delta_cop_one
    )
    return QTStructure(vec(r), rinv)


def solve_cocycle_inverse(H: QuantumGroupoid, f) -> WeakCocycle:
    """Solve for F^-1 in Delta_cop(1)(H (x) H)Delta(1)."""
    finv = _solve_sandwiched_inverse(
        H, vec(f), H.delta_one, H.delta_cop_one, H.delta_cop_one, H.delta_one
    )
    return WeakCocycle(vec(f), finv)
