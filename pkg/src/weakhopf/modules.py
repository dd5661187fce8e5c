"""Left modules, the truncated tensor product, unitors and braidings.

The monoidal product of two modules is the image of the projector given by
the (possibly cocycle-twisted) coproduct of 1 acting componentwise; the
unit object is the target subalgebra H_t with action h . z = eps_t(h z).
Braidings are stored as exact matrices between canonical image bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    QuantumGroupoid,
    epsilon_t,
    target_subalgebra,
)
from .errors import (
    InconsistentStructure,
    MismatchedAlgebra,
    NotCocommutative,
)
from .linalg import Matrix, Q0, Q1, SubspaceBasis, kron
from .report import VerificationReport, comparison
from .structures import QTStructure, WeakCocycle, swap2


class HModule:
    """Left module over a quantum groupoid, one action matrix per basis."""

    def __init__(self, algebra: QuantumGroupoid, mats, name=""):
        self.algebra = algebra
        self.mats = tuple(mats)
        if len(self.mats) != algebra.dim:
            raise MismatchedAlgebra("need one action matrix per algebra basis")
        self.dim = self.mats[0].rows if self.mats else 0
        self.name = name

    def act_element(self, x) -> Matrix:
        """Action matrix of an algebra element given by coefficients."""
        m = Matrix.zero(self.dim, self.dim)
        for i, c in enumerate(x):
            if c:
                mi = self.mats[i]
                for r in range(self.dim):
                    row = mi.data[r]
                    mrow = m.data[r]
                    for j in range(self.dim):
                        if row[j]:
                            mrow[j] += c * row[j]
        return m

    def sparse_columns(self):
        """Per basis element, the action matrix columns as sparse dicts."""
        if not hasattr(self, "_sparse_cols"):
            self._sparse_cols = [
                [
                    {r: mat.data[r][c] for r in range(self.dim) if mat.data[r][c]}
                    for c in range(self.dim)
                ]
                for mat in self.mats
            ]
        return self._sparse_cols

    def validate(self):
        """(gh) . v = g . (h . v) on basis pairs and 1 . v = v."""
        if getattr(self, "_validated", False):
            return self
        H = self.algebra
        cols = self.sparse_columns()
        for i in range(H.dim):
            ci = cols[i]
            for j in range(H.dim):
                cj = cols[j]
                row = H.mul_rows.get((i, j), {})
                for v in range(self.dim):
                    lhs = {}
                    for k, c in row.items():
                        for r, val in cols[k][v].items():
                            lhs[r] = lhs.get(r, Q0) + c * val
                    rhs = {}
                    for s, cs in cj[v].items():
                        for r, val in ci[s].items():
                            rhs[r] = rhs.get(r, Q0) + cs * val
                    lhs = {r: c for r, c in lhs.items() if c}
                    rhs = {r: c for r, c in rhs.items() if c}
                    if lhs != rhs:
                        raise InconsistentStructure(
                            "action is not multiplicative at basis pair (%d, %d)"
                            % (i, j)
                        )
        for v in range(self.dim):
            acc = {}
            for i, c in enumerate(H.unit):
                if c:
                    for r, val in cols[i][v].items():
                        acc[r] = acc.get(r, Q0) + c * val
            acc = {r: c for r, c in acc.items() if c}
            if acc != {v: Q1}:
                raise InconsistentStructure("unit does not act as the identity")
        self._validated = True
        return self


def check_module(M: HModule) -> VerificationReport:
    rep = VerificationReport("module")
    H = M.algebra

    def mult_pairs():
        for i in range(H.dim):
            for j in range(H.dim):
                lhs = M.act_element(H.mul[i][j])
                rhs = M.mats[i] * M.mats[j]
                for col in range(M.dim):
                    yield (i, j, col), lhs.column(col), rhs.column(col)

    comparison(rep, "action-multiplicative", mult_pairs())
    one = M.act_element(H.unit)
    comparison(
        rep,
        "unit-acts-as-identity",
        (((j,), one.column(j), Matrix.identity(M.dim).column(j)) for j in range(M.dim)),
    )
    return rep


def regular_module(H: QuantumGroupoid) -> HModule:
    cached = H.__dict__.get("_regular_module")
    if cached is None:
        cached = HModule(H, H.left_mult_mats, name="regular")
        H.__dict__["_regular_module"] = cached
    return cached


def ht_module(H: QuantumGroupoid):
    """The unit object: H_t with action h . z = eps_t(h z).

    Returns (basis of H_t, HModule in H_t coordinates).
    """
    ht = target_subalgebra(H)
    emb = ht.embedding()
    mats = []
    for i in range(H.dim):
        cols = []
        for z in ht.vectors:
            val = epsilon_t(H, H.mul_elem(H.basis_vector(i), z))
            coords = ht.coordinates(val)
            if coords is None:
                raise InconsistentStructure("eps_t(h z) escaped H_t")
            cols.append(coords)
        mats.append(Matrix.from_columns(cols, ht.dim))
    return ht, HModule(H, mats, name="H_t")


@dataclass
class TruncatedTensor:
    """Image of the unit-coproduct projector on M (x) N with induced action."""

    left: HModule
    right: HModule
    variant: str  # "plain" | "twisted"
    projector: Matrix
    basis: SubspaceBasis
    inclusion: Matrix  # ambient x image-dim
    projection: Matrix  # image-dim x ambient
    module: HModule  # induced action in image coordinates

    @property
    def ambient_dim(self):
        return self.left.dim * self.right.dim

    @property
    def dim(self):
        return self.basis.dim


def _nonzeros(mat: Matrix):
    return [
        (r, c, v)
        for r, row in enumerate(mat.data)
        for c, v in enumerate(row)
        if v
    ]


def _componentwise_action(M: HModule, N: HModule, elem2) -> Matrix:
    """Action of an element of H (x) H on M (x) N (first leg on M)."""
    n = M.algebra.dim
    nd = N.dim
    out = Matrix.zero(M.dim * nd, M.dim * nd)
    od = out.data
    nz_m = {}
    nz_n = {}
    for flat, c in enumerate(elem2):
        if not c:
            continue
        a, b = divmod(flat, n)
        if a not in nz_m:
            nz_m[a] = _nonzeros(M.mats[a])
        if b not in nz_n:
            nz_n[b] = _nonzeros(N.mats[b])
        for r1, c1, v1 in nz_m[a]:
            cv = c * v1
            base_r = r1 * nd
            base_c = c1 * nd
            for r2, c2, v2 in nz_n[b]:
                od[base_r + r2][base_c + c2] += cv * v2
    return out


def twisted_coproduct_column(H, wc: WeakCocycle, i) -> tuple:
    """F^-1 Delta(e_i) F as a dense 2-tensor."""
    return H.mul2(H.mul2(wc.finv, H.comul_map.column(i)), wc.f)


def truncated_tensor(
    M: HModule,
    N: HModule,
    variant: str = "plain",
    wc: Optional[WeakCocycle] = None,
    validate: bool = True,
) -> TruncatedTensor:
    if M.algebra is not N.algebra:
        raise MismatchedAlgebra("modules over different algebras")
    H = M.algebra
    if variant == "plain":
        columns = [H.comul_map.column(i) for i in range(H.dim)]
        unit2 = H.delta_one
    elif variant == "twisted":
        if wc is None:
            raise MismatchedAlgebra("twisted tensor needs a cocycle")
        columns = [twisted_coproduct_column(H, wc, i) for i in range(H.dim)]
        unit2 = H.mul2(wc.finv, wc.f)  # = Delta_cop(1), = Delta(1) when cocommutative
    else:
        raise ValueError("variant must be 'plain' or 'twisted'")

    projector = _componentwise_action(M, N, unit2)
    if projector * projector != projector:
        raise InconsistentStructure("tensor projector is not idempotent")
    basis = projector.column_space()
    inclusion = basis.embedding()
    # projection = pivot extraction after projecting; satisfies
    # proj . incl = id and incl . proj = projector.
    sel = Matrix.zero(basis.dim, projector.rows)
    for r, p in enumerate(basis.pivots):
        sel.data[r][p] = Q1
    projection = sel * projector
    big = [_componentwise_action(M, N, col) for col in columns]
    mats = [projection * b * inclusion for b in big]
    module = HModule(H, mats, name="tensor")
    if validate:
        module.validate()
    return TruncatedTensor(
        M, N, variant, projector, basis, inclusion, projection, module
    )


def plain_tensor_action(tt: TruncatedTensor, i) -> Matrix:
    """Ambient-coordinates action of basis element i on the tensor square."""
    H = tt.left.algebra
    if tt.variant == "plain":
        col = H.comul_map.column(i)
    else:
        raise ValueError("plain action requested from a twisted tensor")
    return _componentwise_action(tt.left, tt.right, col)


# ---------------------------------------------------------------------------
# braidings


def _flip_matrix(m_dim, n_dim) -> Matrix:
    out = Matrix.zero(n_dim * m_dim, m_dim * n_dim)
    for a in range(m_dim):
        for b in range(n_dim):
            out.data[b * m_dim + a][a * n_dim + b] = Q1
    return out


def braiding_psi_plain(H, qt: QTStructure, M: HModule, N: HModule) -> Matrix:
    """v (x) w -> R^(2) . w (x) R^(1) . v on plain coordinates."""
    r21 = swap2(H, qt.r)
    return _componentwise_action(N, M, r21) * _flip_matrix(M.dim, N.dim)


def braiding_psi_inverse_plain(H, qt: QTStructure, M: HModule, N: HModule) -> Matrix:
    """w (x) v -> R^-(2) . v (x) R^-(1) . w on plain coordinates."""
    rinv21 = swap2(H, qt.rinv)
    return _componentwise_action(M, N, rinv21) * _flip_matrix(N.dim, M.dim)


def braiding_psi(qt: QTStructure, M: HModule, N: HModule, tensors=None):
    """The braiding and its inverse between truncated-tensor image bases."""
    H = M.algebra
    if tensors is None:
        t_mn = truncated_tensor(M, N)
        t_nm = truncated_tensor(N, M)
    else:
        t_mn, t_nm = tensors
    psi = t_nm.projection * braiding_psi_plain(H, qt, M, N) * t_mn.inclusion
    psi_inv = t_mn.projection * braiding_psi_inverse_plain(H, qt, M, N) * t_nm.inclusion
    return psi, psi_inv


def braiding_phi_plain(H, wc: WeakCocycle, M: HModule, N: HModule) -> Matrix:
    """m (x) n -> (F^-(1) F'(2)) . n (x) (F^-(2) F'(1)) . m, plain coordinates."""
    g = H.mul2(wc.finv, swap2(H, wc.f))
    return _componentwise_action(N, M, g) * _flip_matrix(M.dim, N.dim)


def braiding_phi(wc: WeakCocycle, M: HModule, N: HModule, tensors=None):
    """Braiding of the cocycle-twisted category, with its matrix inverse."""
    H = M.algebra
    if not H.is_cocommutative:
        raise NotCocommutative("the twisted braiding requires cocommutativity")
    if tensors is None:
        t_mn = truncated_tensor(M, N, "twisted", wc)
        t_nm = truncated_tensor(N, M, "twisted", wc)
    else:
        t_mn, t_nm = tensors
    phi = t_nm.projection * braiding_phi_plain(H, wc, M, N) * t_mn.inclusion
    inv = phi.inverse()
    if inv is None:
        raise InconsistentStructure("twisted braiding is not invertible")
    return phi, inv


# ---------------------------------------------------------------------------
# braid context: everything a verifier needs about the ambient category


@dataclass(frozen=True)
class BraidContext:
    """Monoidal/braided data of the module category used by the verifiers."""

    algebra: QuantumGroupoid
    kind: str  # "psi" | "phi"
    qt: Optional[QTStructure] = None
    wc: Optional[WeakCocycle] = None

    @classmethod
    def psi(cls, H, qt):
        return cls(H, "psi", qt=qt)

    @classmethod
    def phi(cls, H, wc):
        if not H.is_cocommutative:
            raise NotCocommutative("the twisted category requires cocommutativity")
        return cls(H, "phi", wc=wc)

    @property
    def variant(self):
        return "plain" if self.kind == "psi" else "twisted"

    def tensor(self, M, N, validate=True) -> TruncatedTensor:
        return truncated_tensor(M, N, self.variant, self.wc, validate=validate)

    def braiding_pair(self, M, N, tensors=None):
        if self.kind == "psi":
            return braiding_psi(self.qt, M, N, tensors)
        return braiding_phi(self.wc, M, N, tensors)

    def braiding_plain(self, M, N) -> Matrix:
        if self.kind == "psi":
            return braiding_psi_plain(self.algebra, self.qt, M, N)
        return braiding_phi_plain(self.algebra, self.wc, M, N)

    def coproduct_column(self, i) -> tuple:
        if self.kind == "psi":
            return self.algebra.comul_map.column(i)
        return twisted_coproduct_column(self.algebra, self.wc, i)

    def coproduct_of(self, x) -> tuple:
        H = self.algebra
        out = [Q0] * (H.dim * H.dim)
        for i, c in enumerate(x):
            if c:
                for flat, c2 in enumerate(self.coproduct_column(i)):
                    if c2:
                        out[flat] += c * c2
        return tuple(out)

    def unit_coproduct(self) -> tuple:
        return self.coproduct_of(self.algebra.unit)

    def unit_coproduct_power(self, k) -> dict:
        """Iterated coproduct of 1 as a sparse element of H^(x)k."""
        H = self.algebra
        n = H.dim
        cur = {(i,): c for i, c in enumerate(H.unit) if c}
        for _ in range(k - 1):
            nxt = {}
            for idx, c in cur.items():
                first = idx[0]
                for flat, c2 in enumerate(self.coproduct_column(first)):
                    if c2:
                        a, b = divmod(flat, n)
                        key = (a, b) + idx[1:]
                        nxt[key] = nxt.get(key, Q0) + c * c2
            cur = {kk: v for kk, v in nxt.items() if v}
        return cur


# ---------------------------------------------------------------------------
# unitors


def unitors(M: HModule, ctx: BraidContext):
    """Unit constraints l(z (x) v) = z . v and r(v (x) z) = S^-1(z) . v.

    Returns (l, r, left_tensor, right_tensor) where l and r map image
    coordinates of H_t (x) M resp. M (x) H_t onto M.  Raises when either
    fails to be a bijection onto M.
    """
    H = ctx.algebra
    ht, zmod = ht_module(H)
    t_l = ctx.tensor(zmod, M)
    t_r = ctx.tensor(M, zmod)

    l_plain = Matrix.zero(M.dim, zmod.dim * M.dim)
    for zi in range(zmod.dim):
        act = M.act_element(ht.vectors[zi])
        for vi in range(M.dim):
            col = act.column(vi)
            for r in range(M.dim):
                l_plain.data[r][zi * M.dim + vi] = col[r]
    r_plain = Matrix.zero(M.dim, M.dim * zmod.dim)
    for zi in range(zmod.dim):
        act = M.act_element(H.s_inv_of(ht.vectors[zi]))
        for vi in range(M.dim):
            col = act.column(vi)
            for r in range(M.dim):
                r_plain.data[r][vi * zmod.dim + zi] = col[r]

    l_mat = l_plain * t_l.inclusion
    r_mat = r_plain * t_r.inclusion
    if t_l.dim != M.dim or l_mat.inverse() is None:
        raise InconsistentStructure("left unitor is not a bijection onto the module")
    if t_r.dim != M.dim or r_mat.inverse() is None:
        raise InconsistentStructure("right unitor is not a bijection onto the module")
    for h in range(H.dim):
        if l_mat * t_l.module.mats[h] != M.mats[h] * l_mat:
            raise InconsistentStructure("left unitor is not a module morphism")
        if r_mat * t_r.module.mats[h] != M.mats[h] * r_mat:
            raise InconsistentStructure("right unitor is not a module morphism")
    return l_mat, r_mat, t_l, t_r


# ---------------------------------------------------------------------------
# optional coherence checks (hexagons etc. on module triples)


def coherence_report(ctx: BraidContext, M: HModule, N: HModule, P: HModule) -> VerificationReport:
    """Hexagon identities and bracketing consistency on a module triple.

    Slow relative to the default suites; intended for small instances.
    """
    rep = VerificationReport("coherence")
    H = ctx.algebra
    n = H.dim

    t_mn = ctx.tensor(M, N, validate=False)
    t_np = ctx.tensor(N, P, validate=False)
    left = ctx.tensor(t_mn.module, P, validate=False)
    right = ctx.tensor(M, t_np.module, validate=False)

    # both bracketings must carve out the same subspace of M (x) N (x) P
    lift_l = kron(t_mn.inclusion, Matrix.identity(P.dim)) * left.inclusion
    lift_r = kron(Matrix.identity(M.dim), t_np.inclusion) * right.inclusion
    sub_l = lift_l.column_space()
    sub_r = lift_r.column_space()
    rep.add("bracketing-subspaces-equal", sub_l == sub_r)

    # triple projector in plain coordinates spans the same subspace
    w3 = ctx.unit_coproduct_power(3)
    triple = Matrix.zero(M.dim * N.dim * P.dim, M.dim * N.dim * P.dim)
    for (a, b, c), coeff in w3.items():
        term = kron(kron(M.mats[a], N.mats[b]), P.mats[c])
        for r in range(triple.rows):
            trow = term.data[r]
            orow = triple.data[r]
            for j in range(triple.cols):
                if trow[j]:
                    orow[j] += coeff * trow[j]
    rep.add("iterated-unit-projector-subspace", triple.column_space() == sub_l)

    # hexagon 1: braiding M past N (x) P equals braiding in two steps,
    # realized on plain M (x) N (x) P coordinates (associators are the
    # identity there)
    psi_m_np = ctx.braiding_plain(M, t_np.module)
    dom = kron(Matrix.identity(M.dim), t_np.projection)
    cod = kron(t_np.inclusion, Matrix.identity(M.dim))
    lhs = cod * psi_m_np * dom
    step1 = kron(ctx.braiding_plain(M, N), Matrix.identity(P.dim))
    step2 = kron(Matrix.identity(N.dim), ctx.braiding_plain(M, P))
    rhs = step2 * step1
    rep.add("hexagon-first", _equal_on_subspace(lhs, rhs, lift_l))

    # hexagon 2: braiding M (x) N past P
    psi_mn_p = ctx.braiding_plain(t_mn.module, P)
    dom = kron(t_mn.projection, Matrix.identity(P.dim))
    cod = kron(Matrix.identity(P.dim), t_mn.inclusion)
    lhs = cod * psi_mn_p * dom
    step1 = kron(Matrix.identity(M.dim), ctx.braiding_plain(N, P))
    step2 = kron(ctx.braiding_plain(M, P), Matrix.identity(N.dim))
    rhs = step2 * step1
    rep.add("hexagon-second", _equal_on_subspace(lhs, rhs, lift_l))

    # unitor triangle: (id (x) l) = (r (x) id) across M (x) H_t (x) N
    ht, zmod = ht_module(H)
    l_plain = Matrix.zero(N.dim, zmod.dim * N.dim)
    r_plain = Matrix.zero(M.dim, M.dim * zmod.dim)
    for zi, z in enumerate(ht.vectors):
        act_l = N.act_element(z)
        act_r = M.act_element(H.s_inv_of(z))
        for vj in range(N.dim):
            for row, val in enumerate(act_l.column(vj)):
                l_plain.data[row][zi * N.dim + vj] = val
        for vj in range(M.dim):
            for row, val in enumerate(act_r.column(vj)):
                r_plain.data[row][vj * zmod.dim + zi] = val
    w3z = ctx.unit_coproduct_power(3)
    triple_z = Matrix.zero(
        M.dim * zmod.dim * N.dim, M.dim * zmod.dim * N.dim
    )
    for (a, b, c), coeff in w3z.items():
        term = kron(kron(M.mats[a], zmod.mats[b]), N.mats[c])
        for r in range(triple_z.rows):
            trow = term.data[r]
            orow = triple_z.data[r]
            for j in range(triple_z.cols):
                if trow[j]:
                    orow[j] += coeff * trow[j]
    lhs = kron(Matrix.identity(M.dim), l_plain)
    rhs = kron(r_plain, Matrix.identity(N.dim))
    rep.add("unitor-triangle", _equal_on_subspace(lhs, rhs, triple_z))
    return rep


def _equal_on_subspace(a: Matrix, b: Matrix, lift: Matrix) -> bool:
    return a * lift == b * lift
