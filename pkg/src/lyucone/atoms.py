"""Built-in smooth projective building blocks and perverse presentations.

Each atom is a smooth projective variety given by a hard-coded cohomology
ring fragment: a pure weight-graded space (weight equals degree), one
operator per named divisor class, and optionally restriction/pushforward
data for a distinguished subvariety.  There is no general intersection
theory engine; the multiplication tables below are exactly the ones the
constructions need.

Ample selections are integer coefficient vectors over the named classes.
Each atom validates selections against the stated cone (both factors
positive on a product of lines, ``a > b > 0`` for ``a,h - b,e`` on the
one-point blow-up, and so on).  Whether a selection is genuinely *very*
ample -- i.e. whether it comes from an actual projective embedding -- is
the caller's responsibility and is not decided here; see the README.

``presentation_of_smooth`` converts an atom to its perverse presentation:
a single piece at ``j = dim`` obtained by relabeling ``H^{k+d}`` with
degree ``k`` in ``[-d, d]`` and weight ``k - d``, with all class operators
transported along the relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from . import qlinalg
from .errors import (GradedShapeError, InvalidClassError, LyuconeError,
                     PreconditionError)
from .graded import (GradedOp, TwistShift, WGVS, kunneth, kunneth_op,
                     op_combination, op_power_rank_at, twist, twist_op, zero_op)
from .oracle import AuditWindow
from .qlinalg import QMat


def format_selection(coeffs: Mapping[str, int]) -> str:
    """Human-readable name of a class selection, e.g. ``2e1+e2`` or ``2h-e``."""
    terms = []
    for name, c in coeffs.items():
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        terms.append(("-" if c < 0 else "+", f"{mag}{name}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        out += sign + t
    return out


@dataclass(frozen=True)
class SmoothAtom:
    """A smooth projective variety with named divisor-class operators."""

    name: str
    dim: int
    cohomology: WGVS
    classes: dict[str, GradedOp]
    default_ample: dict[str, int]
    ample_rule: Callable[[Mapping[str, int]], str | None]
    pairing: dict[int, QMat] = field(default_factory=dict)
    subvarieties: dict[str, "SubvarietyData"] = field(default_factory=dict)

    def betti(self, k: int) -> int:
        return self.cohomology.dim(k)

    def euler(self) -> int:
        return self.cohomology.euler()

    def combination(self, coeffs: Mapping[str, int], name: str | None = None) -> GradedOp:
        """Integer combination of the named class operators (no cone check)."""
        unknown = [k for k in coeffs if k not in self.classes]
        if unknown:
            raise InvalidClassError(f"{self.name} has no class named {unknown[0]!r}")
        label = name or format_selection(coeffs)
        terms = [(c, self.classes[n]) for n, c in coeffs.items() if c != 0]
        if not terms:
            return zero_op(self.cohomology, label)
        return op_combination(terms, label)

    def ample(self, coeffs: Mapping[str, int], name: str | None = None) -> GradedOp:
        """Combination operator, after validating the selection is in the ample cone."""
        unknown = [k for k in coeffs if k not in self.classes]
        if unknown:
            raise InvalidClassError(f"{self.name} has no class named {unknown[0]!r}")
        problem = self.ample_rule(coeffs)
        if problem is not None:
            raise InvalidClassError(f"{self.name}: {format_selection(coeffs)}: {problem}")
        return self.combination(coeffs, name)


@dataclass(frozen=True)
class SubvarietyData:
    """Restriction and Gysin data for a closed embedding between two atoms.

    ``restrict[k]`` maps ``H^k(ambient) -> H^k(sub)``; ``gysin[k]`` maps
    ``H^k(sub) -> H^{k+2 codim}(ambient)``.  ``class_pullback`` rewrites an
    ambient class name as a combination of the sub's classes, and
    ``divisor_class`` expresses the fundamental class of the subvariety in
    ambient class coordinates (for codimension one: the divisor class).
    """

    ambient: SmoothAtom
    sub: SmoothAtom
    codim: int
    restrict: dict[int, QMat]
    gysin: dict[int, QMat]
    class_pullback: dict[str, dict[str, int]]
    divisor_class: dict[str, int]

    def restrict_at(self, k: int) -> QMat:
        got = self.restrict.get(k)
        if got is not None:
            return got
        return QMat.zero(self.sub.cohomology.basis_at(k, k),
                         self.ambient.cohomology.basis_at(k, k))

    def gysin_at(self, k: int) -> QMat:
        got = self.gysin.get(k)
        if got is not None:
            return got
        r2 = k + 2 * self.codim
        return QMat.zero(self.ambient.cohomology.basis_at(r2, r2),
                         self.sub.cohomology.basis_at(k, k))

    def pullback_selection(self, coeffs: Mapping[str, int]) -> dict[str, int]:
        out: dict[str, int] = {}
        for cname, c in coeffs.items():
            if c == 0:
                continue
            table = self.class_pullback.get(cname)
            if table is None:
                raise InvalidClassError(
                    f"no pullback rule for class {cname!r} on {self.sub.name}")
            for sname, s in table.items():
                out[sname] = out.get(sname, 0) + c * s
        return out

    def pullback_op(self, coeffs: Mapping[str, int], name: str | None = None) -> GradedOp:
        return self.sub.combination(self.pullback_selection(coeffs),
                                    name or format_selection(coeffs))


@dataclass(frozen=True)
class PerversePresentation:
    """A scheme presented by its family of perverse pieces.

    ``pieces[j]`` is the weight-graded space housing degree-graded data of
    the j-th piece; ``ops[ample][j]`` is the Chern-class operator of the
    named ample selection on that piece.  ``pure`` records that there is a
    single nonzero piece sitting at ``j = dim``.
    """

    name: str
    dim: int
    pieces: dict[int, WGVS]
    ops: dict[str, dict[int, GradedOp]]
    pure: bool
    conventions: dict[str, object] = field(default_factory=dict)
    audits: tuple[AuditWindow, ...] = ()
    extras: dict[str, WGVS] = field(default_factory=dict)
    expected_euler: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for j in self.pieces:
            if not 0 <= j <= self.dim:
                raise GradedShapeError(
                    f"{self.name}: perverse piece index {j} outside [0, {self.dim}]")
        if self.pure and set(self.pieces) != {self.dim}:
            raise GradedShapeError(
                f"{self.name}: pure presentations have exactly one piece at j = dim")

    @property
    def class_names(self) -> tuple[str, ...]:
        return tuple(self.ops)

    def piece(self, j: int) -> WGVS | None:
        return self.pieces.get(j)

    def op(self, ample: str, j: int) -> GradedOp:
        if ample not in self.ops:
            raise InvalidClassError(f"{self.name} has no ample selection {ample!r}")
        got = self.ops[ample].get(j)
        if got is None:
            space = self.pieces.get(j)
            if space is None:
                raise GradedShapeError(f"{self.name} has no piece {j}")
            return zero_op(space, ample)
        return got


def _pure_space(name: str, bases: Mapping[int, Sequence[str]]) -> WGVS:
    return WGVS(name, {(k, k): tuple(labels) for k, labels in bases.items()})


def _only_keys(coeffs: Mapping[str, int], allowed: set[str]) -> str | None:
    extra = [k for k in coeffs if k not in allowed]
    if extra:
        return f"unknown class {extra[0]!r}"
    return None


def projective_space(n: int) -> SmoothAtom:
    """P^n with the hyperplane class ``h`` acting by index shift."""
    if n < 0:
        raise PreconditionError("projective space needs n >= 0")
    lab = ["1"] + ["h" if i == 1 else f"h^{i}" for i in range(1, n + 1)]
    space = _pure_space(f"P{n}", {2 * i: (lab[i],) for i in range(n + 1)})
    blocks = {(2 * i, 2 * i): QMat.build([lab[i + 1]], [lab[i]], [[1]])
              for i in range(n)}
    classes = {"h": GradedOp("h", space, space, blocks)} if n >= 1 else {}
    pairing = {2 * i: QMat.build([lab[n - i]], [lab[i]], [[1]]) for i in range(n + 1)}

    def rule(coeffs: Mapping[str, int]) -> str | None:
        bad = _only_keys(coeffs, {"h"} if n >= 1 else set())
        if bad:
            return bad
        if n == 0:
            return None
        if coeffs.get("h", 0) < 1:
            return "needs a positive multiple of h"
        return None

    return SmoothAtom(f"P{n}", n, space, classes,
                      {"h": 1} if n >= 1 else {}, rule, pairing)


def p1xp1() -> SmoothAtom:
    """P1 x P1 with the two ruling classes and its diagonal subvariety."""
    space = _pure_space("P1xP1", {0: ("1",), 2: ("e1", "e2"), 4: ("e1e2",)})
    e1 = GradedOp("e1", space, space, {
        (0, 0): QMat.build(["e1", "e2"], ["1"], [[1], [0]]),
        (2, 2): QMat.build(["e1e2"], ["e1", "e2"], [[0, 1]]),
    })
    e2 = GradedOp("e2", space, space, {
        (0, 0): QMat.build(["e1", "e2"], ["1"], [[0], [1]]),
        (2, 2): QMat.build(["e1e2"], ["e1", "e2"], [[1, 0]]),
    })
    pairing = {
        0: QMat.build(["e1e2"], ["1"], [[1]]),
        2: QMat.build(["e1", "e2"], ["e1", "e2"], [[0, 1], [1, 0]]),
        4: QMat.build(["1"], ["e1e2"], [[1]]),
    }

    def rule(coeffs: Mapping[str, int]) -> str | None:
        bad = _only_keys(coeffs, {"e1", "e2"})
        if bad:
            return bad
        if coeffs.get("e1", 0) < 1 or coeffs.get("e2", 0) < 1:
            return "ample classes are a1 e1 + a2 e2 with a1, a2 > 0"
        return None

    atom = SmoothAtom("P1xP1", 2, space, {"e1": e1, "e2": e2},
                      {"e1": 1, "e2": 1}, rule, pairing)
    diag = projective_space(1)
    atom.subvarieties["diagonal"] = SubvarietyData(
        ambient=atom, sub=diag, codim=1,
        restrict={0: QMat.build(["1"], ["1"], [[1]]),
                  2: QMat.build(["h"], ["e1", "e2"], [[1, 1]])},
        gysin={0: QMat.build(["e1", "e2"], ["1"], [[1], [1]]),
               2: QMat.build(["e1e2"], ["h"], [[1]])},
        class_pullback={"e1": {"h": 1}, "e2": {"h": 1}},
        divisor_class={"e1": 1, "e2": 1},
    )
    return atom


def blowup_p2() -> SmoothAtom:
    """One-point blow-up of P2: h^2 = p, e^2 = -p, h.e = 0.

    Besides ``h`` and the exceptional class ``e`` it names ``f = h - e``
    (the class of a line through the blown-up point), so that every integral
    class ``a h - b e`` in the ample cone ``a > b > 0`` is a positive
    combination of named classes.
    """
    space = _pure_space("BlP2", {0: ("1",), 2: ("h", "e"), 4: ("p",)})
    h = GradedOp("h", space, space, {
        (0, 0): QMat.build(["h", "e"], ["1"], [[1], [0]]),
        (2, 2): QMat.build(["p"], ["h", "e"], [[1, 0]]),
    })
    e = GradedOp("e", space, space, {
        (0, 0): QMat.build(["h", "e"], ["1"], [[0], [1]]),
        (2, 2): QMat.build(["p"], ["h", "e"], [[0, -1]]),
    })
    f = GradedOp("f", space, space, {
        (0, 0): QMat.build(["h", "e"], ["1"], [[1], [-1]]),
        (2, 2): QMat.build(["p"], ["h", "e"], [[1, 1]]),
    })
    pairing = {
        0: QMat.build(["p"], ["1"], [[1]]),
        2: QMat.build(["h", "e"], ["h", "e"], [[1, 0], [0, -1]]),
        4: QMat.build(["1"], ["p"], [[1]]),
    }

    def rule(coeffs: Mapping[str, int]) -> str | None:
        bad = _only_keys(coeffs, {"h", "e", "f"})
        if bad:
            return bad
        a = coeffs.get("h", 0) + coeffs.get("f", 0)
        b = coeffs.get("f", 0) - coeffs.get("e", 0)
        if not (a > b > 0):
            return f"a h - b e is ample only for a > b > 0 (got a={a}, b={b})"
        return None

    return SmoothAtom("BlP2", 2, space, {"h": h, "e": e, "f": f},
                      {"h": 2, "e": -1}, rule, pairing)


def blowup_ample_selection(a: int, b: int) -> dict[str, int]:
    """Coefficients of ``a h - b e`` for the blow-up atom."""
    return {"h": a, "e": -b}


def plane_curve(d_e: int) -> SmoothAtom:
    """A smooth plane curve of degree ``d_e``; genus (d_e-1)(d_e-2)/2.

    Its class ``h`` is the restricted hyperplane class, so cup product
    sends the unit to ``d_e`` times the point class and kills middle
    cohomology.  Use ``plane_curve_in_p2`` for the embedding data.
    """
    if d_e < 1:
        raise PreconditionError("plane curves need degree >= 1")
    g = (d_e - 1) * (d_e - 2) // 2
    mid = tuple(f"a{i}" for i in range(1, 2 * g + 1))
    space = WGVS(f"E{d_e}", {(0, 0): ("1",), (1, 1): mid, (2, 2): ("pt",)})
    h = GradedOp("h", space, space, {
        (0, 0): QMat.build(["pt"], ["1"], [[d_e]]),
    })
    pairing = {0: QMat.build(["pt"], ["1"], [[1]]),
               2: QMat.build(["1"], ["pt"], [[1]])}
    if g:
        sym = [[0] * 2 * g for _ in range(2 * g)]
        for i in range(g):
            sym[2 * i + 1][2 * i] = 1
            sym[2 * i][2 * i + 1] = -1
        pairing[1] = QMat.build(mid, mid, sym)

    def rule(coeffs: Mapping[str, int]) -> str | None:
        bad = _only_keys(coeffs, {"h"})
        if bad:
            return bad
        if coeffs.get("h", 0) < 1:
            return "needs a positive multiple of h"
        return None

    return SmoothAtom(f"E{d_e}", 1, space, {"h": h}, {"h": 1}, rule, pairing)


def plane_curve_in_p2(d_e: int) -> SubvarietyData:
    """The embedding of a degree-``d_e`` smooth curve into P2."""
    p2 = projective_space(2)
    curve = plane_curve(d_e)
    return SubvarietyData(
        ambient=p2, sub=curve, codim=1,
        restrict={0: QMat.build(["1"], ["1"], [[1]]),
                  2: QMat.build(["pt"], ["h"], [[d_e]])},
        gysin={0: QMat.build(["h"], ["1"], [[d_e]]),
               2: QMat.build(["h^2"], ["pt"], [[1]])},
        class_pullback={"h": {"h": 1}},
        divisor_class={"h": d_e},
    )


def atom_product(a: SmoothAtom, b: SmoothAtom) -> SmoothAtom:
    """Product variety; classes are the pullbacks ``p1_*`` / ``p2_*``."""
    name = f"{a.name}×{b.name}"
    space = kunneth(a.cohomology, b.cohomology, name)
    classes: dict[str, GradedOp] = {}
    for n, op in a.classes.items():
        classes[f"p1_{n}"] = kunneth_op(op, zero_op(b.cohomology),
                                        name=f"p1_{n}", space=space)
    for n, op in b.classes.items():
        classes[f"p2_{n}"] = kunneth_op(zero_op(a.cohomology), op,
                                        name=f"p2_{n}", space=space)
    default = {f"p1_{k}": v for k, v in a.default_ample.items()}
    default.update({f"p2_{k}": v for k, v in b.default_ample.items()})

    def rule(coeffs: Mapping[str, int]) -> str | None:
        first: dict[str, int] = {}
        second: dict[str, int] = {}
        for key, v in coeffs.items():
            if key.startswith("p1_"):
                first[key[3:]] = v
            elif key.startswith("p2_"):
                second[key[3:]] = v
            else:
                return f"unknown class {key!r}"
        bad = a.ample_rule(first)
        if bad:
            return f"first factor: {bad}"
        bad = b.ample_rule(second)
        if bad:
            return f"second factor: {bad}"
        return None

    return SmoothAtom(name, a.dim + b.dim, space, classes, default, rule)


def disjoint_double(atom: SmoothAtom, tags: tuple[str, str] = ("c0", "c1")) -> SmoothAtom:
    """Two disjoint copies of one atom, with tagged basis labels.

    The copies carry no merged class dictionary; unions act on them through
    explicitly provided per-copy operators (see ``double_op``).
    """
    pieces = {}
    for (k, w), labels in atom.cohomology.pieces.items():
        pieces[(k, w)] = tuple(f"{tags[0]}:{x}" for x in labels) + \
            tuple(f"{tags[1]}:{x}" for x in labels)
    space = WGVS(f"{atom.name}⊔{atom.name}", pieces)

    def rule(coeffs: Mapping[str, int]) -> str | None:
        return "disjoint unions take per-copy operators, not named selections"

    return SmoothAtom(space.name, atom.dim, space, {}, {}, rule)


def double_op(double: SmoothAtom, op0: GradedOp, op1: GradedOp, name: str) -> GradedOp:
    """Blockwise ``op0 ⊕ op1`` on a ``disjoint_double`` atom."""
    space = double.cohomology

    def halves(k: int, w: int) -> tuple[tuple[str, ...], tuple[str, ...]]:
        labels = space.basis_at(k, w)
        return labels[:len(labels) // 2], labels[len(labels) // 2:]

    blocks = {}
    for (k, w) in space.support():
        src0, src1 = halves(k, w)
        tgt0, tgt1 = halves(k + 2, w + 2)
        b0 = op0.block(k, w).relabeled(tgt0, src0)
        b1 = op1.block(k, w).relabeled(tgt1, src1)
        blocks[(k, w)] = qlinalg.block_diag(b0, b1)
    return GradedOp(name, space, space, blocks)


def p1_bundle(base: SmoothAtom, chern: Mapping[str, int],
              name: str | None = None) -> SmoothAtom:
    """P1-bundle over ``base`` compactifying the line bundle with class ``chern``.

    Cohomology is free over the base on ``{1, ξ}`` with the relation
    ``ξ^2 = c'ξ`` where ``c'`` is the given first Chern class.  The zero
    section has class ``ξ``, the section at infinity ``ξ - c'``; their
    product is zero, matching disjoint sections.  Both sections are exposed
    as subvarieties with restriction/Gysin data.
    """
    cname = format_selection(chern)
    cprime = base.combination(chern, cname)
    bs = base.cohomology
    name = name or f"P(O⊕O({cname}))/{base.name}"

    def fiber(lbl: str) -> str:
        return f"{lbl}·ξ"

    pieces: dict[tuple[int, int], tuple[str, ...]] = {}
    for k in range(0, 2 * base.dim + 3):
        labels = tuple(bs.basis_at(k, k)) + tuple(fiber(x) for x in bs.basis_at(k - 2, k - 2))
        if labels:
            pieces[(k, k)] = labels
    space = WGVS(name, pieces)

    def bundle_block(k: int, base_block: QMat, xi_block: QMat,
                     base_to_fiber: QMat | None = None) -> QMat:
        src = space.basis_at(k, k)
        tgt = space.basis_at(k + 2, k + 2)
        nb = len(bs.basis_at(k, k))
        rows = []
        tgt_nb = len(bs.basis_at(k + 2, k + 2))
        for i in range(tgt_nb):
            rows.append(tuple(base_block.entries[i]) + tuple([qlinalg.Rat(0)] * (len(src) - nb)))
        for i in range(len(tgt) - tgt_nb):
            left = base_to_fiber.entries[i] if base_to_fiber is not None \
                else tuple([qlinalg.Rat(0)] * nb)
            rows.append(tuple(left) + tuple(xi_block.entries[i]))
        return QMat(tuple(rows), tgt, src)

    classes: dict[str, GradedOp] = {}
    for n, op in base.classes.items():
        blocks = {}
        for (k, _) in space.support():
            blocks[(k, k)] = bundle_block(k, op.block(k, k), op.block(k - 2, k - 2))
        classes[n] = GradedOp(n, space, space, blocks)
    xi_blocks = {}
    for (k, _) in space.support():
        ident = QMat.identity(bs.basis_at(k, k))
        xi_blocks[(k, k)] = bundle_block(k,
                                         QMat.zero(bs.basis_at(k + 2, k + 2), bs.basis_at(k, k)),
                                         cprime.block(k - 2, k - 2),
                                         base_to_fiber=ident)
    classes["xi"] = GradedOp("xi", space, space, xi_blocks)

    def rule(coeffs: Mapping[str, int]) -> str | None:
        return "bundle atoms are internal; select classes on the assembled union"

    atom = SmoothAtom(name, base.dim + 1, space, classes, {}, rule)

    def section_data(at_infinity: bool) -> SubvarietyData:
        restrict = {}
        gysin = {}
        for k in range(0, 2 * base.dim + 1):
            src = bs.basis_at(k, k)
            if not src:
                continue
            # restriction of [x + y.ξ] to the section: x + (ξ|_Σ).y
            xi_part = QMat.zero(src, bs.basis_at(k - 2, k - 2)) if at_infinity \
                else cprime.block(k - 2, k - 2)
            mat = qlinalg.hstack(QMat.identity(src), xi_part)
            restrict[k] = mat.relabeled(col_labels=space.basis_at(k, k))
            # pushforward: x -> x.ξ, resp. x.(ξ - c')
            tgt = space.basis_at(k + 2, k + 2)
            base_part = (-cprime.block(k, k)) if at_infinity \
                else QMat.zero(bs.basis_at(k + 2, k + 2), src)
            g = qlinalg.vstack(base_part, QMat.identity(src))
            gysin[k] = g.relabeled(row_labels=tgt)
        pull = {n: {n: 1} for n in base.classes}
        if at_infinity:
            pull["xi"] = {}
            div = {"xi": 1}
            div.update({k: -v for k, v in chern.items()})
        else:
            pull["xi"] = dict(chern)
            div = {"xi": 1}
        return SubvarietyData(ambient=atom, sub=base, codim=1,
                              restrict=restrict, gysin=gysin,
                              class_pullback=pull, divisor_class=div)

    atom.subvarieties["zero_section"] = section_data(False)
    atom.subvarieties["infinity_section"] = section_data(True)
    return atom


def poincare_and_purity_hold(atom: SmoothAtom) -> bool:
    """Weight purity, degree range, and Poincaré symmetry of Betti numbers."""
    for (k, w) in atom.cohomology.support():
        if w != k or not 0 <= k <= 2 * atom.dim:
            return False
    return all(atom.betti(k) == atom.betti(2 * atom.dim - k)
               for k in range(0, 2 * atom.dim + 1))


def hard_lefschetz_holds(atom: SmoothAtom, coeffs: Mapping[str, int]) -> bool:
    """Whether the (d-k)-fold power of the selection maps H^k isomorphically up."""
    op = atom.ample(coeffs)
    d = atom.dim
    for k in range(0, d):
        if op_power_rank_at(op, k, d - k) != atom.betti(k):
            return False
    return True


def projection_formula_holds(data: SubvarietyData) -> bool:
    """Blockwise check of ``class . gysin == gysin . restricted class``."""
    amb, sub = data.ambient, data.sub
    shift = 2 * data.codim
    for cname in amb.classes:
        try:
            sub_op = data.pullback_op({cname: 1})
        except InvalidClassError:
            return False
        amb_op = amb.classes[cname]
        for k in range(0, 2 * sub.dim + 1):
            left = qlinalg.compose(amb_op.block(k + shift, k + shift), data.gysin_at(k))
            right = qlinalg.compose(data.gysin_at(k + 2), sub_op.block(k, k))
            if left.entries != right.entries:
                return False
    return True


def gysin_of_unit_is_divisor_class(data: SubvarietyData) -> bool:
    """``gysin(1)`` equals the stated class of the subvariety in the ambient ring."""
    got = data.gysin_at(0)
    expected = data.ambient.combination(data.divisor_class).block(0, 0)
    return got.entries == expected.entries


def presentation_of_smooth(atom: SmoothAtom,
                           amples: Mapping[str, Mapping[str, int]] | None = None,
                           name: str | None = None) -> PerversePresentation:
    """Perverse presentation of a smooth atom: one pure piece at ``j = dim``."""
    d = atom.dim
    ts = TwistShift(tate=d, shift=d)
    piece = twist(atom.cohomology, ts, name=f"H({atom.name})[{d}]({d})")
    if amples is None:
        amples = {"L": dict(atom.default_ample)}
    ops = {}
    for aname, coeffs in amples.items():
        ops[aname] = {d: twist_op(atom.ample(coeffs, aname), ts, piece, piece)}
    return PerversePresentation(
        name=name or f"pres({atom.name})",
        dim=d,
        pieces={d: piece},
        ops=ops,
        pure=True,
        conventions={
            "weights": "degree-k piece is pure of weight k - dim",
            "ample_selections": {a: format_selection(c) for a, c in amples.items()},
            "very_ampleness": "selection cones are checked; actual very-ampleness "
                              "of a selection is the caller's responsibility",
        },
        expected_euler={d: (-1) ** d * atom.euler()},
    )
