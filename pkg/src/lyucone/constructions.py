"""Assembly of reducible schemes as perverse presentations.

The engines here split long exact sequences weightwise.  Every connecting
position contributes a cokernel (sitting at the lower weight) and a kernel
(one weight higher); strictness of all the maps involved for the weight
filtration makes this splitting canonical on the weight-graded level, and
the extension between the two parts is deliberately never modeled.

Two independent code paths build the glued-surfaces example: ``nc_union``
works cohomologically from the divisor data, while ``union_two_smooth``
runs the closed-cover Mayer-Vietoris in homological indexing.  They must
agree -- the test suite holds them to that.

Sign convention: the intersection pushes into the two pieces as
``x -> (push_a x, -push_b x)``.  Ranks do not depend on the sign; the
convention is recorded in each presentation's metadata for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from . import qlinalg
from .atoms import (PerversePresentation, SmoothAtom, SubvarietyData,
                    atom_product, disjoint_double, double_op, format_selection,
                    p1_bundle, plane_curve, plane_curve_in_p2,
                    projective_space)
from .errors import (GradedShapeError, InternalInconsistencyError,
                     InvalidClassError, LyuconeError, NonEquidimensionalError,
                     PreconditionError, UnsupportedOperationError,
                     UnsupportedProductError)
from .graded import (GradedOp, TwistShift, WGVS, direct_sum, kunneth,
                     kunneth_op, op_kernel_dim_at, twist, twist_op, zero_op)
from .oracle import AuditWindow
from .qlinalg import QMat, Rat


@dataclass(frozen=True)
class UnionClass:
    """One ample selection, given by its action on each union constituent."""

    name: str
    on_a: GradedOp
    on_b: GradedOp
    on_i: GradedOp


@dataclass(frozen=True)
class UnionInput:
    """Two equidimensional smooth pieces glued along a common divisor.

    ``push_a[k]`` is the pushforward ``H^k(I) -> H^{k+2}(A)`` (missing keys
    are zero maps into the stated bases), and similarly ``push_b``.  The
    combined map carries the ``(x, sign*x)`` convention with ``sign = -1``
    by default; ranks are sign-independent.
    """

    piece_a: SmoothAtom
    piece_b: SmoothAtom
    intersection: SmoothAtom
    push_a: dict[int, QMat]
    push_b: dict[int, QMat]
    sign: int = -1


@dataclass(frozen=True)
class GysinSplitPieces:
    """Kernel/cokernel split of a degree-2 operator, cone-indexed.

    ``assembled`` at degree ``k`` is coker(op: k-1 -> k+1) plus
    ker(op: k -> k+2), so a Lyubeznik entry at ``(k, j)`` equals the total
    assembled dimension in degree ``k-1`` of the split of piece ``j-1``.
    """

    coker_part: WGVS
    ker_part: WGVS
    assembled: WGVS
    audit: AuditWindow


def _hom_basis(atom: SmoothAtom, m: int) -> tuple[str, ...]:
    k = 2 * atom.dim - m
    return atom.cohomology.basis_at(k, k)


def _push_at(push: dict[int, QMat], atom_from: SmoothAtom, atom_to: SmoothAtom,
             k: int) -> QMat:
    got = push.get(k)
    cols = atom_from.cohomology.basis_at(k, k)
    rows = atom_to.cohomology.basis_at(k + 2, k + 2)
    if got is None:
        return QMat.zero(rows, cols)
    if got.col_labels != cols or got.row_labels != rows:
        raise LyuconeError(
            f"push map at degree {k} has bases {got.row_labels}/{got.col_labels}, "
            f"expected {rows}/{cols}")
    return got


def union_two_smooth(u: UnionInput, classes: Sequence[UnionClass],
                     name: str | None = None) -> PerversePresentation:
    """Closed-cover Mayer-Vietoris assembly of ``A ∪ B`` glued along ``I``.

    Produces a single perverse piece at ``j = dim``: per homological degree
    ``m``, the weight ``-m`` part is coker(H_m(I) -> H_m(A) + H_m(B)) and
    the weight ``-m+1`` part is the kernel one homological degree down.
    Each requested class acts componentwise on the cokernel part and through
    the intersection on the kernel part.
    """
    a, b, i = u.piece_a, u.piece_b, u.intersection
    d = a.dim
    if b.dim != d:
        raise NonEquidimensionalError(
            f"pieces have dimensions {a.dim} and {b.dim}; "
            "non-equidimensional unions are built by nonequidim_x2")
    if i.dim != d - 1:
        raise LyuconeError("union pieces must meet along a divisor (dim I = dim - 1)")
    if u.push_a is None or u.push_b is None:
        raise LyuconeError("missing push maps")
    if u.sign not in (1, -1):
        raise LyuconeError("sign convention must be +1 or -1")
    label = name or f"{a.name}∪{b.name}"

    push_mat: dict[int, QMat] = {}
    kernels: dict[int, QMat] = {}
    coker_labels: dict[int, tuple[str, ...]] = {}
    ab_labels: dict[int, tuple[str, ...]] = {}
    for m in range(0, 2 * d + 1):
        ki = 2 * (d - 1) - m
        ia = tuple(f"A:{x}" for x in _hom_basis(a, m))
        ib = tuple(f"B:{x}" for x in _hom_basis(b, m))
        ab_labels[m] = ia + ib
        pa = _push_at(u.push_a, i, a, ki).relabeled(row_labels=ia)
        pb = _push_at(u.push_b, i, b, ki).relabeled(row_labels=ib).scaled(u.sign)
        p = qlinalg.vstack(pa, pb)
        push_mat[m] = p
        pivots, _ = qlinalg.quotient_projector(p)
        coker_labels[m] = tuple(p.row_labels[idx] for idx in pivots)
        kernels[m] = qlinalg.kernel_basis(p, label_prefix=f"∂{m}.")

    pieces: dict[tuple[int, int], tuple[str, ...]] = {}
    for m in range(0, 2 * d + 1):
        if coker_labels[m]:
            pieces[(d - m, -m)] = coker_labels[m]
        if kernels[m].cols:
            pieces[(d - m - 1, -m)] = kernels[m].col_labels
    space = WGVS(label, pieces)

    def hom_block(op: GradedOp, atom: SmoothAtom, m: int) -> QMat:
        k = 2 * atom.dim - m
        return op.block(k, k)

    ops: dict[str, dict[int, GradedOp]] = {}
    for cls in classes:
        blocks: dict[tuple[int, int], QMat] = {}
        for m in range(2, 2 * d + 1):
            if coker_labels[m] and coker_labels[m - 2]:
                la = hom_block(cls.on_a, a, m).relabeled(
                    row_labels=[f"A:{x}" for x in _hom_basis(a, m - 2)],
                    col_labels=[f"A:{x}" for x in _hom_basis(a, m)])
                lb = hom_block(cls.on_b, b, m).relabeled(
                    row_labels=[f"B:{x}" for x in _hom_basis(b, m - 2)],
                    col_labels=[f"B:{x}" for x in _hom_basis(b, m)])
                lab = qlinalg.block_diag(la, lb).relabeled(
                    ab_labels[m - 2], ab_labels[m])
                blocks[(d - m, -m)] = qlinalg.induced_on_quotient(
                    push_mat[m], push_mat[m - 2], lab)
            if kernels[m].cols and kernels[m - 2].cols:
                li = hom_block(cls.on_i, i, m)
                blocks[(d - m - 1, -m)] = qlinalg.induced_on_kernel(
                    kernels[m], kernels[m - 2], li)
        ops[cls.name] = {d: GradedOp(cls.name, space, space, blocks)}

    dims: list[int] = []
    ranks: list[int] = []
    for m in range(2 * d, -1, -1):
        idim = len(_hom_basis(i, m))
        kdim = qlinalg.kernel_dim(push_mat[m])
        ranks.append(kdim)
        dims.append(idim)
        ranks.append(idim - kdim)
        dims.append(len(ab_labels[m]))
        ranks.append(len(coker_labels[m]))
        dims.append(len(coker_labels[m]) + (kernels[m - 1].cols if m >= 1 else 0))
    ranks.append(0)
    window = AuditWindow(f"Mayer-Vietoris window for {label}",
                         tuple(dims), tuple(ranks))

    chi = a.euler() + b.euler() - i.euler()
    return PerversePresentation(
        name=label, dim=d, pieces={d: space}, ops=ops, pure=True,
        conventions={
            "sign_convention": f"x -> (push_a x, {u.sign:+d} push_b x)",
            "weights": "homological degree m contributes weight -m (cokernel "
                       "part) and -m+1 (kernel part)",
        },
        audits=(window,),
        expected_euler={d: (-1) ** d * chi},
    )


def union_input_from_divisor(y: SmoothAtom, div: SubvarietyData) -> UnionInput:
    """The two-copies-of-Y-glued-along-D input, for cross-checking nc_union."""
    push = {k: div.gysin_at(k) for k in range(0, 2 * div.sub.dim + 1)
            if div.sub.cohomology.basis_at(k, k)}
    return UnionInput(piece_a=y, piece_b=y, intersection=div.sub,
                      push_a=push, push_b=dict(push))


def union_classes_from_divisor(y: SmoothAtom, div: SubvarietyData,
                               amples: Mapping[str, Mapping[str, int]]) -> list[UnionClass]:
    out = []
    for aname, coeffs in amples.items():
        op = y.ample(coeffs, aname)
        out.append(UnionClass(aname, op, op, div.pullback_op(coeffs, aname)))
    return out


def nc_union(y: SmoothAtom, div: SubvarietyData,
             amples: Mapping[str, Mapping[str, int]] | None = None,
             name: str | None = None) -> PerversePresentation:
    """Two copies of ``y`` inside a line bundle, glued transversally along ``div``.

    Assembled cohomologically: at presentation degree ``k`` the weight
    ``k-d`` part is coker(push: H^{k+d-2}(D) -> H^{k+d}(Y)+H^{k+d}(Y)) and
    the weight ``k-d+1`` part is the kernel one degree up.  This is a code
    path independent of ``union_two_smooth``; the two must agree.
    """
    if div.codim != 1:
        raise UnsupportedOperationError("normal-crossing unions glue along a divisor")
    if div.ambient.cohomology != y.cohomology:
        raise LyuconeError("divisor data does not belong to this atom")
    d = y.dim
    if amples is None:
        amples = {"L": dict(y.default_ample)}
    label = name or f"NC({y.name},{div.sub.name})"

    def y2_labels(j: int) -> tuple[str, ...]:
        base = y.cohomology.basis_at(j, j)
        return tuple(f"Y0:{x}" for x in base) + tuple(f"Y1:{x}" for x in base)

    mats: dict[int, QMat] = {}
    kers: dict[int, QMat] = {}
    cokers: dict[int, tuple[str, ...]] = {}
    for j in range(0, 2 * d + 3):
        g = div.gysin_at(j - 2)
        base = y.cohomology.basis_at(j, j)
        top = g.relabeled(row_labels=[f"Y0:{x}" for x in base])
        bot = (-g).relabeled(row_labels=[f"Y1:{x}" for x in base])
        mats[j] = qlinalg.vstack(top, bot)
        pivots, _ = qlinalg.quotient_projector(mats[j])
        cokers[j] = tuple(mats[j].row_labels[idx] for idx in pivots)
        kers[j] = qlinalg.kernel_basis(mats[j], label_prefix=f"δ{j}.")

    pieces: dict[tuple[int, int], tuple[str, ...]] = {}
    for k in range(-d, d + 2):
        if cokers.get(k + d):
            pieces[(k, k - d)] = cokers[k + d]
        if k + d + 1 in kers and kers[k + d + 1].cols:
            pieces[(k, k - d + 1)] = kers[k + d + 1].col_labels
    space = WGVS(label, pieces)

    ops: dict[str, dict[int, GradedOp]] = {}
    for aname, coeffs in amples.items():
        ly = y.ample(coeffs, aname)
        ld = div.pullback_op(coeffs, aname)
        blocks: dict[tuple[int, int], QMat] = {}
        for k in range(-d, d + 1):
            j = k + d
            if cokers.get(j) and cokers.get(j + 2):
                blk = ly.block(j, j)
                base_s = y.cohomology.basis_at(j, j)
                base_t = y.cohomology.basis_at(j + 2, j + 2)
                top = blk.relabeled([f"Y0:{x}" for x in base_t],
                                    [f"Y0:{x}" for x in base_s])
                bot = blk.relabeled([f"Y1:{x}" for x in base_t],
                                    [f"Y1:{x}" for x in base_s])
                l2 = qlinalg.block_diag(top, bot).relabeled(y2_labels(j + 2), y2_labels(j))
                blocks[(k, k - d)] = qlinalg.induced_on_quotient(mats[j], mats[j + 2], l2)
            if j + 3 in kers and kers[j + 1].cols and kers[j + 3].cols:
                blocks[(k, k - d + 1)] = qlinalg.induced_on_kernel(
                    kers[j + 1], kers[j + 3], ld.block(j - 1, j - 1))
        ops[aname] = {d: GradedOp(aname, space, space, blocks)}

    dims: list[int] = []
    ranks: list[int] = []
    for j in range(0, 2 * d + 3):
        src = div.sub.cohomology.dim(j - 2)
        kdim = qlinalg.kernel_dim(mats[j])
        ranks.append(kdim)
        dims.append(src)
        ranks.append(src - kdim)
        dims.append(len(y2_labels(j)))
        ranks.append(len(cokers[j]))
        nextker = kers[j + 1].cols if j + 1 in kers else 0
        dims.append(len(cokers[j]) + nextker)
    ranks.append(0)
    window = AuditWindow(f"divisor-union window for {label}", tuple(dims), tuple(ranks))

    chi = 2 * y.euler() - div.sub.euler()
    return PerversePresentation(
        name=label, dim=d, pieces={d: space}, ops=ops, pure=True,
        conventions={
            "sign_convention": "x -> (push x, -push x)",
            "weights": "degree k carries weights k-d (cokernel part) and "
                       "k-d+1 (kernel part)",
            "ample_selections": {a: format_selection(c) for a, c in amples.items()},
        },
        audits=(window,),
        expected_euler={d: (-1) ** d * chi},
    )


def nonequidim_x2(d2: int, restriction_degree: int = 1,
                  amples: Mapping[str, int] | None = None) -> PerversePresentation:
    """The non-equidimensional scheme: a punctured-affine-space stratum under two planes.

    Piece ``j = d2`` comes from the open stratum and is one-dimensional in
    degrees ``-d2`` and ``d2 - 1`` with every class acting by zero (the two
    degrees are more than 2 apart once d2 >= 2).  Piece ``j = d2 + 1`` is
    two disjoint copies of projective (d2+1)-space, where a selection acts
    by ``restriction_degree`` times the hyperplane shift on each copy.

    Weight normalization of the stratum piece (bottom class at weight
    ``-2 d2``, top at weight 0) is a recorded convention; dimension counts
    never depend on it.
    """
    if d2 < 2:
        raise PreconditionError("nonequidim_x2 needs d2 >= 2")
    if restriction_degree < 1:
        raise InvalidClassError("restriction degree must be positive")
    if amples is None:
        amples = {"L2": 1}
    for aname, mult in amples.items():
        if mult < 1:
            raise InvalidClassError(f"{aname}: selections are positive multiples of L2")

    stratum = WGVS(f"Zprime({d2})", {(-d2, -2 * d2): ("zp_fund",),
                                     (d2 - 1, 0): ("zp_link",)})
    plane = projective_space(d2 + 1)
    planes = disjoint_double(plane, ("c0", "c1"))
    ts = TwistShift(tate=d2 + 1, shift=d2 + 1)
    plane_piece = twist(planes.cohomology, ts, name=f"Z2({d2})")

    ops: dict[str, dict[int, GradedOp]] = {}
    for aname, mult in amples.items():
        h = plane.classes["h"]
        dbl = double_op(planes, h, h, aname)
        scaled = GradedOp(aname, planes.cohomology, planes.cohomology,
                          {key: mat.scaled(mult * restriction_degree)
                           for key, mat in dbl.blocks.items()})
        ops[aname] = {
            d2: zero_op(stratum, aname),
            d2 + 1: twist_op(scaled, ts, plane_piece, plane_piece),
        }

    return PerversePresentation(
        name=f"X2_noneq({d2})", dim=d2 + 1,
        pieces={d2: stratum, d2 + 1: plane_piece},
        ops=ops, pure=False,
        conventions={
            "weights": "open-stratum piece normalized with bottom class at "
                       "weight -2*d2 and top at weight 0 (absolute twists on "
                       "this piece are a convention, not an assertion)",
            "restriction_degree": restriction_degree,
        },
        expected_euler={d2: (-1) ** d2 + (-1) ** (d2 - 1),
                        d2 + 1: (-1) ** (d2 + 1) * 2 * (d2 + 2)},
    )


def _kunneth_gysin_family(pair: SubvarietyData, other: SmoothAtom,
                          sub_prod: SmoothAtom,
                          amb_prod: SmoothAtom) -> dict[int, QMat]:
    """Gysin maps of ``pair.sub x other -> pair.ambient x other`` in product bases.

    Both products must come from ``atom_product`` with the embedded factor
    first, so the tensor labels line up.
    """
    out: dict[int, QMat] = {}
    shift = 2 * pair.codim
    sub_c = pair.sub.cohomology
    other_c = other.cohomology
    for k in range(0, 2 * sub_prod.dim + 1):
        cols = sub_prod.cohomology.basis_at(k, k)
        rows = amb_prod.cohomology.basis_at(k + shift, k + shift)
        if not cols:
            continue
        row_index = {lbl: idx for idx, lbl in enumerate(rows)}
        col_index = {lbl: idx for idx, lbl in enumerate(cols)}
        grid = [[Rat(0)] * len(cols) for _ in rows]
        for (ka, wa) in sub_c.support():
            alab = sub_c.basis_at(ka, wa)
            blab = other_c.basis_at(k - ka, k - ka)
            if not blab:
                continue
            g = pair.gysin_at(ka)
            for ja, x in enumerate(alab):
                for y in blab:
                    col = col_index[f"{x}⊗{y}"]
                    for ra, rl in enumerate(g.row_labels):
                        v = g.entry(ra, ja)
                        if v != 0:
                            grid[row_index[f"{rl}⊗{y}"]][col] += v
        out[k] = QMat(tuple(tuple(r) for r in grid), rows, cols)
    return out


def equidim_x2(d2: int, d_e: int,
               amples: Mapping[str, tuple[int, int, int]] | None = None,
               name: str | None = None) -> PerversePresentation:
    """The equidimensional scheme: a P1-bundle over curve x projective space,
    glued to two planes along its zero and infinity sections.

    ``amples`` maps each selection name to coefficients ``(alpha, beta,
    gamma)`` of the pulled-back plane hyperplane class, the pulled-back
    projective-space hyperplane class, and the relative zero-section class;
    all three must be positive.  The returned presentation has one piece at
    ``j = d2`` and carries the two sides of its defining sequence in
    ``extras`` ("z2_side" and "zprime_side"), together with the
    reconstructed connecting ranks; injectivity of the connecting maps one
    degree either side of ``d2 - 2`` is asserted, not assumed.
    """
    if d2 < 3:
        raise PreconditionError("equidim_x2 needs d2 >= 3")
    if d_e < 3:
        raise PreconditionError("equidim_x2 needs a plane curve of degree >= 3")
    if amples is None:
        amples = {"L": (1, 1, 1)}
    curve = plane_curve(d_e)
    pm = projective_space(d2 - 2)
    b0 = atom_product(curve, pm)
    bfull = atom_product(projective_space(2), pm)
    z1 = p1_bundle(b0, {"p2_h": 1}, name=f"Z1({d2},{d_e})")
    tags = ("s0", "sI")
    z2 = disjoint_double(bfull, tags)
    idub = disjoint_double(b0, tags)
    zsec = z1.subvarieties["zero_section"]
    isec = z1.subvarieties["infinity_section"]

    push_a: dict[int, QMat] = {}
    for k in range(0, 2 * b0.dim + 1):
        cols0 = b0.cohomology.basis_at(k, k)
        if not cols0:
            continue
        g0 = zsec.gysin_at(k).relabeled(col_labels=[f"{tags[0]}:{x}" for x in cols0])
        g1 = isec.gysin_at(k).relabeled(col_labels=[f"{tags[1]}:{x}" for x in cols0])
        push_a[k] = qlinalg.hstack(g0, g1).relabeled(
            col_labels=idub.cohomology.basis_at(k, k))
    emb = plane_curve_in_p2(d_e)
    ge = _kunneth_gysin_family(emb, pm, b0, bfull)
    push_b: dict[int, QMat] = {}
    for k, g in ge.items():
        top = g.relabeled([f"{tags[0]}:{x}" for x in g.row_labels],
                          [f"{tags[0]}:{x}" for x in g.col_labels])
        bot = g.relabeled([f"{tags[1]}:{x}" for x in g.row_labels],
                          [f"{tags[1]}:{x}" for x in g.col_labels])
        push_b[k] = qlinalg.block_diag(top, bot).relabeled(
            z2.cohomology.basis_at(k + 2, k + 2), idub.cohomology.basis_at(k, k))

    classes = []
    for aname, (alpha, beta, gamma) in amples.items():
        if min(alpha, beta, gamma) < 1:
            raise InvalidClassError(
                f"{aname}: all three coefficients (plane, space, relative) "
                "must be positive")
        on_a = z1.combination({"p1_h": alpha, "p2_h": beta, "xi": gamma}, aname)
        # xi restricts to the bundle class on the zero section, to 0 at infinity
        on_b = double_op(z2, bfull.combination({"p1_h": alpha, "p2_h": beta + gamma}),
                         bfull.combination({"p1_h": alpha, "p2_h": beta}), aname)
        on_i = double_op(idub, b0.combination({"p1_h": alpha, "p2_h": beta + gamma}),
                         b0.combination({"p1_h": alpha, "p2_h": beta}), aname)
        classes.append(UnionClass(aname, on_a, on_b, on_i))

    u = UnionInput(z1, z2, idub, push_a, push_b)
    pres = union_two_smooth(u, classes, name=name or f"X2_equi({d2},{d_e})")

    # the two sides of the defining sequence, in presentation coordinates
    z2_side = twist(z2.cohomology, TwistShift(d2, d2), name="Z2-side")
    b0_ts = TwistShift(d2 - 1, d2 - 1)
    b0_piece = twist(b0.cohomology, b0_ts, name="B0-presentation")
    cop = twist_op(b0.combination({"p2_h": 1}, "c'"), b0_ts, b0_piece, b0_piece)
    zsplit = gysin_split(b0_piece, cop)
    zprime_side = WGVS("Zprime-side", zsplit.assembled.pieces)

    # reconstruct the ranks of the connecting maps stratum -> sections from
    # the assembled dimensions, then assert the two injectivity claims
    x2 = pres.pieces[d2]
    ranks: dict[int, int] = {}
    prev = 0
    for kappa in range(-d2 - 1, d2 + 2):
        r = z2_side.dim(kappa) + zprime_side.dim(kappa) - x2.dim(kappa) - prev
        if r < 0 or r > zprime_side.dim(kappa) or r > z2_side.dim(kappa + 1):
            raise InternalInconsistencyError(
                f"connecting rank {r} at degree {kappa} is out of range")
        ranks[kappa] = r
        prev = r
    if prev != 0:
        raise InternalInconsistencyError("connecting ranks do not close up")
    for kappa in (d2 - 3, d2 - 1):
        if ranks[kappa] != zprime_side.dim(kappa):
            raise InternalInconsistencyError(
                f"stratum-to-sections map is not injective at degree {kappa}")

    genus = (d_e - 1) * (d_e - 2) // 2
    conventions = dict(pres.conventions)
    conventions.update({
        "deg_E": d_e,
        "genus_E": genus,
        "delta2": d2 - 4,
        "bundle_relation": "xi^2 = c'.xi with section classes {xi, xi - c'}",
        "connecting_ranks": tuple(sorted(ranks.items())),
    })
    extras = {"z2_side": z2_side, "zprime_side": zprime_side}
    return replace(pres, conventions=conventions, extras=extras,
                   audits=pres.audits + (zsplit.audit,))


def perverse_product(a: PerversePresentation, b: PerversePresentation,
                     segre: Mapping[str, tuple[str, str]] | None = None,
                     name: str | None = None) -> PerversePresentation:
    """Product presentation; pieces multiply via the Künneth formula.

    At least one factor must have a single nonzero piece, so every output
    index ``j`` receives exactly one tensor product.  ``segre`` names the
    product selections: each maps to a pair (selection on the first factor,
    selection on the second), acting as ``l_a (x) id + id (x) l_b``.
    """
    if len(a.pieces) > 1 and len(b.pieces) > 1:
        raise UnsupportedProductError(
            "at least one product factor must have a single nonzero piece")
    if segre is None:
        segre = {f"{na}*{nb}": (na, nb) for na in a.ops for nb in b.ops}
    label = name or f"{a.name}×{b.name}"
    d = a.dim + b.dim

    pieces: dict[int, WGVS] = {}
    expected: dict[int, int] = {}
    pairs: list[tuple[int, int, int]] = []
    for ja in sorted(a.pieces):
        for jb in sorted(b.pieces):
            j = ja + jb
            pieces[j] = kunneth(a.pieces[ja], b.pieces[jb], name=f"{label}[{j}]")
            expected[j] = a.pieces[ja].euler() * b.pieces[jb].euler()
            pairs.append((j, ja, jb))

    ops: dict[str, dict[int, GradedOp]] = {}
    for sname, (na, nb) in segre.items():
        if na not in a.ops:
            raise InvalidClassError(f"{a.name} has no selection {na!r}")
        if nb not in b.ops:
            raise InvalidClassError(f"{b.name} has no selection {nb!r}")
        ops[sname] = {j: kunneth_op(a.op(na, ja), b.op(nb, jb),
                                    name=sname, space=pieces[j])
                      for j, ja, jb in pairs}

    conventions: dict[str, object] = {"product_of": (a.name, b.name)}
    for src in (a.conventions, b.conventions):
        for key in ("deg_E", "genus_E", "delta2", "restriction_degree",
                    "sign_convention"):
            if key in src and key not in conventions:
                conventions[key] = src[key]
    return PerversePresentation(
        name=label, dim=d, pieces=pieces, ops=ops,
        pure=set(pieces) == {d},
        conventions=conventions,
        audits=a.audits + b.audits,
        expected_euler=expected,
    )


def gysin_split(piece: WGVS, op: GradedOp, r: int = 1,
                name: str | None = None) -> GysinSplitPieces:
    """Kernel/cokernel split of the Euler-class action, cone-indexed.

    For the affine-cone situation the bundle has rank one and the operator
    is the ample class; ``assembled(k)`` then carries coker(op: k-1 -> k+1)
    at the twisted-down weight and ker(op: k -> k+2) at the untwisted one.
    Only ``r = 1`` is implemented (operators here always shift degree by 2).
    """
    if r != 1:
        raise UnsupportedOperationError(
            "only rank-one bundles (r = 1, the cone case) are supported")
    if op.source != piece or op.target != piece:
        raise GradedShapeError("gysin_split needs an endomorphism of the given piece")

    cok_pieces: dict[tuple[int, int], tuple[str, ...]] = {}
    ker_pieces: dict[tuple[int, int], tuple[str, ...]] = {}
    for (kk, w) in piece.support():
        mat = op.block(kk - 2, w - 2)
        pivots = qlinalg.cokernel_pivots(mat)
        if pivots:
            cok_pieces[(kk - 1, w - 2)] = tuple(
                f"cok:{mat.row_labels[idx]}" for idx in pivots)
        kb = qlinalg.kernel_basis(op.block(kk, w), label_prefix=f"ker:{kk},{w}.")
        if kb.cols:
            ker_pieces[(kk, w)] = kb.col_labels
    coker_part = WGVS(f"coker({op.name})", cok_pieces)
    ker_part = WGVS(f"ker({op.name})", ker_pieces)
    assembled = direct_sum(coker_part, ker_part,
                           name or f"split({piece.name},{op.name})")

    degs = piece.degrees() or (0,)
    lo, hi = min(degs) - 2, max(degs) + 2
    dims: list[int] = []
    ranks: list[int] = []
    for k in range(lo, hi + 1):
        ranks.append(ker_part.dim(k - 1))
        dims.append(piece.dim(k - 1))
        ranks.append(piece.dim(k - 1) - op_kernel_dim_at(op, k - 1))
        dims.append(piece.dim(k + 1))
        ranks.append(coker_part.dim(k))
        dims.append(assembled.dim(k))
    ranks.append(ker_part.dim(hi))
    window = AuditWindow(f"Euler-class window for {piece.name} under {op.name}",
                         tuple(dims), tuple(ranks))
    return GysinSplitPieces(coker_part, ker_part, assembled, window)
