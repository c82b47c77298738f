"""Weight-and-degree-graded rational vector spaces and graded operators.

A ``WGVS`` stores, for finitely many pairs ``(degree k, weight w)``, an
ordered labeled basis.  A ``GradedOp`` is a family of rational matrices
sending the ``(k, w)`` piece to the ``(k+2, w+2)`` piece of its target;
absent blocks mean the zero map.  Cup product with a divisor class raises
the cohomological degree by 2 and, on the weight-graded level, the weight
by 2 (the comparison Tate twist is pure relabeling and is left implicit).

Kernels and cokernels are always computed weight-by-weight.  This is the
computational content of strictness: every morphism in sight is strictly
compatible with the weight filtration, so taking kernels/cokernels commutes
with passing to the weight-graded quotients, and no information is lost by
never modeling the extensions between weight steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import qlinalg
from .errors import GradedShapeError, PreconditionError
from .qlinalg import QMat


@dataclass(frozen=True)
class TwistShift:
    """Tate twist ``(m)`` (weight -> weight - 2m) and shift ``[s]`` (degree -> degree - s)."""

    tate: int = 0
    shift: int = 0

    def apply(self, k: int, w: int) -> tuple[int, int]:
        return k - self.shift, w - 2 * self.tate

    def after(self, other: "TwistShift") -> "TwistShift":
        return TwistShift(self.tate + other.tate, self.shift + other.shift)


class WGVS:
    """A finite weight-graded, degree-graded rational vector space with labeled bases."""

    __slots__ = ("name", "_pieces")

    def __init__(self, name: str, pieces: Mapping[tuple[int, int], Sequence[str]]):
        cleaned: dict[tuple[int, int], tuple[str, ...]] = {}
        for key in sorted(pieces):
            labels = tuple(pieces[key])
            if labels:
                cleaned[key] = labels
        seen: set[str] = set()
        for labels in cleaned.values():
            for lbl in labels:
                if not lbl:
                    raise GradedShapeError("empty basis label")
                if lbl in seen:
                    raise GradedShapeError(f"basis label {lbl!r} reused across pieces")
                seen.add(lbl)
        self.name = name
        self._pieces = cleaned

    @property
    def pieces(self) -> dict[tuple[int, int], tuple[str, ...]]:
        return dict(self._pieces)

    def support(self) -> tuple[tuple[int, int], ...]:
        return tuple(self._pieces)

    def basis_at(self, k: int, w: int) -> tuple[str, ...]:
        return self._pieces.get((k, w), ())

    def dim_at(self, k: int, w: int) -> int:
        return len(self.basis_at(k, w))

    def dim(self, k: int) -> int:
        return sum(len(v) for (kk, _), v in self._pieces.items() if kk == k)

    def weights_at(self, k: int) -> tuple[int, ...]:
        return tuple(w for (kk, w) in self._pieces if kk == k)

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({k for (k, _) in self._pieces}))

    def total_dim(self) -> int:
        return sum(len(v) for v in self._pieces.values())

    def euler(self) -> int:
        return sum((-1) ** k * len(v) for (k, _), v in self._pieces.items())

    def dims_by_degree(self) -> dict[int, int]:
        return {k: self.dim(k) for k in self.degrees()}

    def is_zero(self) -> bool:
        return not self._pieces

    def __eq__(self, other) -> bool:
        return isinstance(other, WGVS) and self._pieces == other._pieces

    def __hash__(self):
        return hash(tuple(sorted((key, labels) for key, labels in self._pieces.items())))

    def __repr__(self) -> str:
        dims = ", ".join(f"({k},{w}):{len(v)}" for (k, w), v in self._pieces.items())
        return f"WGVS({self.name!r}, {dims})"


class GradedOp:
    """A degree-2, weight-2 operator between two WGVS, stored blockwise.

    Blocks are keyed by the source piece ``(k, w)`` and map it to the target
    piece ``(k+2, w+2)``.  Missing blocks are zero.
    """

    __slots__ = ("name", "source", "target", "_blocks")

    def __init__(self, name: str, source: WGVS, target: WGVS,
                 blocks: Mapping[tuple[int, int], QMat]):
        kept: dict[tuple[int, int], QMat] = {}
        for (k, w) in sorted(blocks):
            mat = blocks[(k, w)]
            src = source.basis_at(k, w)
            tgt = target.basis_at(k + 2, w + 2)
            if mat.col_labels != src:
                raise GradedShapeError(
                    f"{name}: block at ({k},{w}) has columns {mat.col_labels}, "
                    f"expected {src}")
            if mat.row_labels != tgt:
                raise GradedShapeError(
                    f"{name}: block at ({k},{w}) has rows {mat.row_labels}, "
                    f"expected {tgt}")
            if mat.rows and mat.cols:
                kept[(k, w)] = mat
        self.name = name
        self.source = source
        self.target = target
        self._blocks = kept

    @property
    def blocks(self) -> dict[tuple[int, int], QMat]:
        return dict(self._blocks)

    def block(self, k: int, w: int) -> QMat:
        got = self._blocks.get((k, w))
        if got is not None:
            return got
        return QMat.zero(self.target.basis_at(k + 2, w + 2), self.source.basis_at(k, w))

    def is_endo(self) -> bool:
        return self.source == self.target

    def __repr__(self) -> str:
        return f"GradedOp({self.name!r}: {self.source.name} -> {self.target.name})"


def zero_op(space: WGVS, name: str = "0") -> GradedOp:
    return GradedOp(name, space, space, {})


def direct_sum(a: WGVS, b: WGVS, name: str | None = None) -> WGVS:
    """Piecewise concatenation of bases; colliding labels get positional prefixes."""
    a_labels = {lbl for labels in a.pieces.values() for lbl in labels}
    b_labels = {lbl for labels in b.pieces.values() for lbl in labels}
    clash = bool(a_labels & b_labels)
    fix_a = (lambda s: f"⥘0:{s}") if clash else (lambda s: s)
    fix_b = (lambda s: f"⥘1:{s}") if clash else (lambda s: s)
    pieces: dict[tuple[int, int], list[str]] = {}
    for key, labels in a.pieces.items():
        pieces.setdefault(key, []).extend(fix_a(x) for x in labels)
    for key, labels in b.pieces.items():
        pieces.setdefault(key, []).extend(fix_b(x) for x in labels)
    return WGVS(name or f"{a.name}⊕{b.name}", pieces)


def kunneth(a: WGVS, b: WGVS, name: str | None = None) -> WGVS:
    """Tensor product: dims convolve over both gradings, labels become ``x⊗y``."""
    pieces: dict[tuple[int, int], list[str]] = {}
    for (k1, w1) in a.support():
        for (k2, w2) in b.support():
            key = (k1 + k2, w1 + w2)
            pieces.setdefault(key, []).extend(
                f"{x}⊗{y}" for x in a.basis_at(k1, w1) for y in b.basis_at(k2, w2))
    return WGVS(name or f"{a.name}⊗{b.name}", pieces)


def twist(a: WGVS, t: TwistShift, name: str | None = None) -> WGVS:
    """Relabel the grading by a Tate twist and a shift; every dimension is preserved."""
    pieces = {t.apply(k, w): labels for (k, w), labels in a.pieces.items()}
    return WGVS(name or a.name, pieces)


def twist_op(op: GradedOp, t: TwistShift,
             source: WGVS | None = None, target: WGVS | None = None) -> GradedOp:
    """Transport an operator along a grading relabeling (same matrices, new keys)."""
    src = source if source is not None else twist(op.source, t)
    tgt = target if target is not None else twist(op.target, t)
    blocks = {t.apply(k, w): mat for (k, w), mat in op.blocks.items()}
    return GradedOp(op.name, src, tgt, blocks)


def op_add(a: GradedOp, b: GradedOp, name: str | None = None) -> GradedOp:
    if a.source != b.source or a.target != b.target:
        raise GradedShapeError(f"cannot add {a.name} and {b.name}: different spaces")
    keys = sorted(set(a.blocks) | set(b.blocks))
    blocks = {key: a.block(*key) + b.block(*key) for key in keys}
    return GradedOp(name or f"{a.name}+{b.name}", a.source, a.target, blocks)


def op_scale(c: int, op: GradedOp, name: str | None = None) -> GradedOp:
    blocks = {key: mat.scaled(c) for key, mat in op.blocks.items()}
    return GradedOp(name or f"{c}{op.name}", op.source, op.target, blocks)


def op_combination(terms: Sequence[tuple[int, GradedOp]], name: str) -> GradedOp:
    """Integer linear combination of operators on one space."""
    if not terms:
        raise GradedShapeError("empty combination")
    out = op_scale(terms[0][0], terms[0][1], name)
    for c, op in terms[1:]:
        out = op_add(out, op_scale(c, op), name)
    return out


def composite_blocks(outer: GradedOp, inner: GradedOp) -> dict[tuple[int, int], QMat]:
    """Blockwise composite ``outer . inner`` (degree shift accumulates to 4).

    Only used for comparisons (commutation checks), so the result is returned
    as raw blocks keyed by the inner source piece.
    """
    if inner.target != outer.source:
        raise GradedShapeError("composition shape mismatch")
    blocks = {}
    for (k, w) in inner.source.support():
        blocks[(k, w)] = qlinalg.compose(outer.block(k + 2, w + 2), inner.block(k, w))
    return blocks


def op_power_rank_at(op: GradedOp, k: int, times: int) -> int:
    """Rank of the ``times``-fold composite from degree ``k`` to ``k + 2*times``."""
    if not op.is_endo():
        raise GradedShapeError("power ranks need an endomorphism-shaped operator")
    total = 0
    for (kk, w) in op.source.support():
        if kk != k:
            continue
        mat = QMat.identity(op.source.basis_at(kk, w))
        for step in range(times):
            mat = qlinalg.compose(op.block(kk + 2 * step, w + 2 * step), mat)
        total += qlinalg.rank(mat)
    return total


def op_kernel_dim_at(op: GradedOp, k: int) -> int:
    """dim of the degree-k kernel, summed weightwise (strictness)."""
    if not op.is_endo():
        raise GradedShapeError("kernel dims need an endomorphism-shaped operator")
    total = 0
    for (kk, w) in op.source.support():
        if kk == k:
            total += qlinalg.kernel_dim(op.block(kk, w))
    return total


def op_cokernel_dim_at(op: GradedOp, k: int) -> int:
    """dim of coker(op: degree k-2 -> degree k), summed weightwise."""
    if not op.is_endo():
        raise GradedShapeError("cokernel dims need an endomorphism-shaped operator")
    total = 0
    for (kk, w) in op.target.support():
        if kk == k:
            total += len(op.target.basis_at(kk, w)) - qlinalg.rank(op.block(k - 2, w - 2))
    return total


def check_commute(l1: GradedOp, l2: GradedOp) -> bool:
    """True iff the two operators on one space commute blockwise."""
    if l1.source != l2.source or l1.target != l2.target or not l1.is_endo():
        raise GradedShapeError("commutation check needs two endomorphisms of one space")
    c12 = composite_blocks(l1, l2)
    c21 = composite_blocks(l2, l1)
    return all(c12[key].entries == c21[key].entries for key in c12)


def surjective_step(op: GradedOp, k: int) -> bool:
    """Whether op maps degree k onto degree k+2 (zero cokernel there)."""
    return op_cokernel_dim_at(op, k + 2) == 0


def surjectivity_propagation(c1: GradedOp, c2: GradedOp, p: int, q: int) -> bool:
    """Surjectivity of ``c1⊗id + id⊗c2`` one step above the top of a short window.

    With the degree-2 grading used throughout, the hypotheses read: the first
    factor is supported in degrees ``{p, p+2, p+4}`` and the second operator
    is surjective on each of the three steps starting at ``q``, ``q+2``,
    ``q+4``.  The verified conclusion is surjectivity of the combined
    operator from total degree ``p+q+4`` onto ``p+q+6``.
    """
    if not c1.is_endo() or not c2.is_endo():
        raise PreconditionError("both operators must be endomorphism-shaped")
    a = c1.source
    bad = [k for k in a.degrees() if k not in (p, p + 2, p + 4)]
    if bad:
        raise PreconditionError(
            f"first factor supported outside degrees [{p}, {p+4}]: {bad}")
    for i in (q, q + 2, q + 4):
        if not surjective_step(c2, i):
            raise PreconditionError(
                f"second operator is not surjective from degree {i} to {i+2}")
    combined = kunneth_op(c1, c2, name=f"{c1.name}⊗id+id⊗{c2.name}")
    return op_cokernel_dim_at(combined, p + q + 6) == 0


def kunneth_op(op_a: GradedOp, op_b: GradedOp, name: str | None = None,
               space: WGVS | None = None) -> GradedOp:
    """``op_a⊗id + id⊗op_b`` on the Künneth product of the two sources."""
    if not op_a.is_endo() or not op_b.is_endo():
        raise GradedShapeError("Künneth operators need endomorphism factors")
    a, b = op_a.source, op_b.source
    prod = space if space is not None else kunneth(a, b)
    blocks: dict[tuple[int, int], QMat] = {}
    for (k, w) in prod.support():
        src_labels = prod.basis_at(k, w)
        tgt_labels = prod.basis_at(k + 2, w + 2)
        if not src_labels or not tgt_labels:
            continue
        row_index = {lbl: i for i, lbl in enumerate(tgt_labels)}
        col_index = {lbl: j for j, lbl in enumerate(src_labels)}
        grid = [[qlinalg.Rat(0)] * len(src_labels) for _ in tgt_labels]
        for (k1, w1) in a.support():
            k2, w2 = k - k1, w - w1
            bl = b.basis_at(k2, w2)
            if not bl:
                continue
            al = a.basis_at(k1, w1)
            mat_a = op_a.block(k1, w1)
            for ja, xa in enumerate(al):
                for jb, xb in enumerate(bl):
                    col = col_index[f"{xa}⊗{xb}"]
                    for ia, ya in enumerate(mat_a.row_labels):
                        v = mat_a.entry(ia, ja)
                        if v != 0:
                            grid[row_index[f"{ya}⊗{xb}"]][col] += v
                    mat_b = op_b.block(k2, w2)
                    for ib, yb in enumerate(mat_b.row_labels):
                        v = mat_b.entry(ib, jb)
                        if v != 0:
                            grid[row_index[f"{xa}⊗{yb}"]][col] += v
        blocks[(k, w)] = QMat(tuple(tuple(r) for r in grid), tgt_labels, src_labels)
    return GradedOp(name or f"{op_a.name}*{op_b.name}", prod, prod, blocks)
