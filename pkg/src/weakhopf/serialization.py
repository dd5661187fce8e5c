"""Bit-exact text format for algebras, structures and presentations.

One document per object.  Fields appear in a fixed order, rationals print
in lowest terms with the sign on the numerator, and every file ends in a
single newline, so serialize(parse(text)) == text on canonical files and
equal objects serialize to identical bytes.  Unknown or out-of-order
fields are errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .algebra import QuantumGroupoid, WeakBialgebra
from .errors import DimensionMismatch, ParseError
from .linalg import Matrix, format_frac
from .structures import QTStructure, WeakCocycle
from .transmute import BraidedHopfPresentation

KINDS = (
    "weak-bialgebra",
    "quantum-groupoid",
    "qt-structure",
    "cocycle",
    "morphism",
    "module",
)


@dataclass(frozen=True)
class ParsedQT:
    basis_names: Tuple[str, ...]
    structure: QTStructure


@dataclass(frozen=True)
class ParsedCocycle:
    basis_names: Tuple[str, ...]
    structure: WeakCocycle


@dataclass(frozen=True)
class ParsedMorphism:
    basis_names: Tuple[str, ...]
    target_basis_names: Tuple[str, ...]
    matrix: Matrix  # column i = image of source basis i


@dataclass(frozen=True)
class ParsedModule:
    basis_names: Tuple[str, ...]
    algebra_basis_names: Tuple[str, ...]
    action_rows: Tuple[Tuple[Fraction, ...], ...]  # one row per algebra basis

    def bind(self, algebra: QuantumGroupoid):
        """Attach to an algebra, producing an HModule."""
        from .modules import HModule

        if tuple(algebra.basis_names) != self.algebra_basis_names:
            raise DimensionMismatch("module references a different algebra basis")
        d = len(self.basis_names)
        mats = []
        for row in self.action_rows:
            m = Matrix.zero(d, d)
            for flat, c in enumerate(row):
                i, j = divmod(flat, d)
                m.data[j][i] = c
            mats.append(m)
        return HModule(algebra, mats)


def _fmt_vec(v):
    return " ".join(format_frac(x) for x in v)


def _serialize_lines(kind, names, sections):
    lines = ["kind: %s" % kind, "dim: %d" % len(names), "basis: %s" % " ".join(names)]
    for key, rows in sections:
        if len(rows) == 1:
            lines.append("%s: %s" % (key, _fmt_vec(rows[0])))
        else:
            lines.append("%s:" % key)
            lines.extend(_fmt_vec(r) for r in rows)
    return "\n".join(lines) + "\n"


def serialize_weak_bialgebra(B: WeakBialgebra) -> str:
    n = B.dim
    mul_rows = [B.mul[i][j] for i in range(n) for j in range(n)]
    comul_rows = [
        tuple(B.comul[i][j][k] for j in range(n) for k in range(n)) for i in range(n)
    ]
    return _serialize_lines(
        "weak-bialgebra",
        B.basis_names,
        [
            ("mul", mul_rows),
            ("unit", [B.unit]),
            ("comul", comul_rows),
            ("counit", [B.counit]),
        ],
    )


def serialize_quantum_groupoid(H: QuantumGroupoid) -> str:
    n = H.dim
    mul_rows = [H.mul[i][j] for i in range(n) for j in range(n)]
    comul_rows = [
        tuple(H.comul[i][j][k] for j in range(n) for k in range(n)) for i in range(n)
    ]
    s_rows = [H.antipode.column(i) for i in range(n)]
    return _serialize_lines(
        "quantum-groupoid",
        H.basis_names,
        [
            ("mul", mul_rows),
            ("unit", [H.unit]),
            ("comul", comul_rows),
            ("counit", [H.counit]),
            ("antipode", s_rows),
        ],
    )


def serialize_qt(H, qt: QTStructure) -> str:
    return _serialize_lines(
        "qt-structure", H.basis_names, [("r", [qt.r]), ("rinv", [qt.rinv])]
    )


def serialize_cocycle(H, wc: WeakCocycle) -> str:
    return _serialize_lines(
        "cocycle", H.basis_names, [("f", [wc.f]), ("finv", [wc.finv])]
    )


def serialize_morphism(f) -> str:
    lines = [
        "kind: morphism",
        "dim: %d" % f.source.dim,
        "basis: %s" % " ".join(f.source.basis_names),
        "target-dim: %d" % f.target.dim,
        "target-basis: %s" % " ".join(f.target.basis_names),
        "matrix:",
    ]
    lines.extend(_fmt_vec(f.matrix.column(i)) for i in range(f.source.dim))
    return "\n".join(lines) + "\n"


def serialize_module(M) -> str:
    H = M.algebra
    d = M.dim
    lines = [
        "kind: module",
        "dim: %d" % d,
        "basis: %s" % " ".join("v%d" % i for i in range(1, d + 1)),
        "algebra-dim: %d" % H.dim,
        "algebra-basis: %s" % " ".join(H.basis_names),
        "action:",
    ]
    for a in range(H.dim):
        row = [M.mats[a].data[j][i] for i in range(d) for j in range(d)]
        lines.append(_fmt_vec(row))
    return "\n".join(lines) + "\n"


def serialize_presentation(p: BraidedHopfPresentation) -> str:
    m = p.carrier.dim
    t = p.ht.dim
    lines = [
        "kind: presentation",
        "acting-dim: %d" % p.acting.dim,
        "acting-basis: %s" % " ".join(p.acting.basis_names),
        "ambient-dim: %d" % p.ambient.dim,
        "ambient-basis: %s" % " ".join(p.ambient.basis_names),
        "carrier-dim: %d" % m,
        "carrier:",
    ]
    lines.extend(_fmt_vec(v) for v in p.carrier.vectors)
    lines.append("ht-dim: %d" % t)
    lines.append("ht:")
    lines.extend(_fmt_vec(v) for v in p.ht.vectors)
    lines.append("action:")
    for a in range(p.acting.dim):
        row = [p.action.mats[a].data[j][i] for i in range(m) for j in range(m)]
        lines.append(_fmt_vec(row))
    lines.append("mul:")
    lines.extend(_fmt_vec(p.mul.column(c)) for c in range(m * m))
    lines.append("unit:")
    lines.extend(_fmt_vec(p.unit.column(c)) for c in range(t))
    lines.append("comul:")
    lines.extend(_fmt_vec(p.comul.column(c)) for c in range(m))
    lines.append("counit:")
    lines.extend(_fmt_vec(p.counit.column(c)) for c in range(m))
    lines.append("antipode:")
    lines.extend(_fmt_vec(p.antipode.column(c)) for c in range(m))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parsing


class _Reader:
    def __init__(self, text):
        self.lines = text.split("\n")
        if self.lines and self.lines[-1] == "":
            self.lines.pop()
        self.pos = 0

    @property
    def lineno(self):
        return self.pos + 1

    def next_line(self, field):
        if self.pos >= len(self.lines):
            raise ParseError("unexpected end of file", line=self.lineno, field=field)
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def expect_done(self):
        if self.pos != len(self.lines):
            raise ParseError(
                "unexpected trailing content %r" % self.lines[self.pos],
                line=self.lineno,
            )

    def key_line(self, key):
        line = self.next_line(key)
        prefix = key + ":"
        if not line.startswith(prefix):
            raise ParseError(
                "expected field %r, found %r" % (key, line), line=self.pos, field=key
            )
        return line[len(prefix):].strip()

    def rationals(self, text, count, field):
        parts = text.split()
        if len(parts) != count:
            raise ParseError(
                "expected %d rationals, found %d" % (count, len(parts)),
                line=self.pos,
                field=field,
            )
        out = []
        for p in parts:
            try:
                out.append(Fraction(p))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(
                    "bad rational %r (%s)" % (p, exc), line=self.pos, field=field
                ) from exc
        return tuple(out)

    def vector_field(self, key, count):
        return self.rationals(self.key_line(key), count, key)

    def block_field(self, key, rows, count):
        head = self.key_line(key)
        if head:
            raise ParseError(
                "field %r must start a block" % key, line=self.pos, field=key
            )
        return tuple(
            self.rationals(self.next_line(key), count, key) for _ in range(rows)
        )


def parse(text: str):
    """Parse one canonical document; returns a typed object by kind."""
    r = _Reader(text)
    kind = r.key_line("kind")
    if kind == "presentation":
        raise ParseError("presentations are write-only artifacts", line=1, field="kind")
    if kind not in KINDS:
        raise ParseError("unknown kind %r" % kind, line=r.pos, field="kind")
    dim_text = r.key_line("dim")
    try:
        n = int(dim_text)
    except ValueError as exc:
        raise ParseError("bad dimension %r" % dim_text, line=r.pos, field="dim") from exc
    if n < 1:
        raise ParseError("dimension must be positive", line=r.pos, field="dim")
    names = tuple(r.key_line("basis").split())
    if len(names) != n:
        raise ParseError(
            "basis has %d names, dim is %d" % (len(names), n),
            line=r.pos,
            field="basis",
        )

    if kind in ("weak-bialgebra", "quantum-groupoid"):
        mul_rows = r.block_field("mul", n * n, n)
        unit = r.vector_field("unit", n)
        comul_rows = r.block_field("comul", n, n * n)
        counit = r.vector_field("counit", n)
        mul = [[mul_rows[i * n + j] for j in range(n)] for i in range(n)]
        comul = [
            [[comul_rows[i][j * n + k] for k in range(n)] for j in range(n)]
            for i in range(n)
        ]
        if kind == "weak-bialgebra":
            r.expect_done()
            return WeakBialgebra(names, mul, unit, comul, counit)
        s_rows = r.block_field("antipode", n, n)
        r.expect_done()
        antipode = Matrix.zero(n, n)
        for i in range(n):
            for j in range(n):
                antipode.data[j][i] = s_rows[i][j]
        base = WeakBialgebra(names, mul, unit, comul, counit)
        return QuantumGroupoid(base, antipode)

    if kind == "qt-structure":
        rr = r.vector_field("r", n * n)
        rinv = r.vector_field("rinv", n * n)
        r.expect_done()
        return ParsedQT(names, QTStructure(rr, rinv))

    if kind == "cocycle":
        f = r.vector_field("f", n * n)
        finv = r.vector_field("finv", n * n)
        r.expect_done()
        return ParsedCocycle(names, WeakCocycle(f, finv))

    if kind == "morphism":
        tdim_text = r.key_line("target-dim")
        try:
            tdim = int(tdim_text)
        except ValueError as exc:
            raise ParseError(
                "bad target dimension %r" % tdim_text, line=r.pos, field="target-dim"
            ) from exc
        tnames = tuple(r.key_line("target-basis").split())
        if len(tnames) != tdim:
            raise ParseError(
                "target basis has %d names, target-dim is %d" % (len(tnames), tdim),
                line=r.pos,
                field="target-basis",
            )
        mat_rows = r.block_field("matrix", n, tdim)
        r.expect_done()
        matrix = Matrix.zero(tdim, n)
        for i in range(n):
            for j in range(tdim):
                matrix.data[j][i] = mat_rows[i][j]
        return ParsedMorphism(names, tnames, matrix)

    # module
    adim_text = r.key_line("algebra-dim")
    try:
        adim = int(adim_text)
    except ValueError as exc:
        raise ParseError(
            "bad algebra dimension %r" % adim_text, line=r.pos, field="algebra-dim"
        ) from exc
    anames = tuple(r.key_line("algebra-basis").split())
    if len(anames) != adim:
        raise ParseError(
            "algebra basis has %d names, algebra-dim is %d" % (len(anames), adim),
            line=r.pos,
            field="algebra-basis",
        )
    action_rows = r.block_field("action", adim, n * n)
    r.expect_done()
    return ParsedModule(names, anames, action_rows)
