"""Exact rational matrices with labeled bases.

Everything downstream counts dimensions of kernels and cokernels of maps
between (co)homology groups, so the arithmetic layer is exact: entries are
`fractions.Fraction`, elimination is plain Gauss over the rationals, and
every matrix carries row/column labels naming the basis classes, so that a
failed composition prints class names instead of index soup.

`Fraction` already maintains the normal form we need (reduced, positive
denominator, zero as 0/1), so it serves directly as the rational scalar
type ``Rat``.

Besides rank/kernel/cokernel this module provides the subquotient helpers
used to transport operators through long exact sequences:
``quotient_projector`` picks a basis of ``V/im(M)`` out of the labeled basis
of ``V``, and ``induced_on_quotient`` / ``induced_on_kernel`` compute the
matrices induced on cokernels and kernels, verifying well-definedness as
they go.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CompositionError, InternalInconsistencyError

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact arithmetic only: got {type(x).__name__}")


@dataclass(frozen=True)
class QMat:
    """A rational matrix between two labeled bases.

    ``entries[i][j]`` is the coefficient of row basis vector ``i`` in the
    image of column basis vector ``j``.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.row_labels):
            raise CompositionError("entry rows do not match row labels")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise CompositionError("entry row width does not match col labels")
        for labels in (self.row_labels, self.col_labels):
            if len(set(labels)) != len(labels):
                raise CompositionError(f"duplicate basis labels in {labels}")
            if any(not lbl for lbl in labels):
                raise CompositionError("empty basis label")

    @staticmethod
    def build(row_labels: Sequence[str], col_labels: Sequence[str],
              entries: Iterable[Iterable[int | Fraction]]) -> "QMat":
        ent = tuple(tuple(_rat(x) for x in row) for row in entries)
        return QMat(ent, tuple(row_labels), tuple(col_labels))

    @staticmethod
    def zero(row_labels: Sequence[str], col_labels: Sequence[str]) -> "QMat":
        rl, cl = tuple(row_labels), tuple(col_labels)
        return QMat(tuple(tuple(_ZERO for _ in cl) for _ in rl), rl, cl)

    @staticmethod
    def identity(labels: Sequence[str]) -> "QMat":
        lab = tuple(labels)
        n = len(lab)
        ent = tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
        return QMat(ent, lab, lab)

    @property
    def rows(self) -> int:
        return len(self.row_labels)

    @property
    def cols(self) -> int:
        return len(self.col_labels)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def scaled(self, c: int | Fraction) -> "QMat":
        c = _rat(c)
        return QMat(tuple(tuple(c * x for x in row) for row in self.entries),
                    self.row_labels, self.col_labels)

    def __neg__(self) -> "QMat":
        return self.scaled(-1)

    def __add__(self, other: "QMat") -> "QMat":
        if self.row_labels != other.row_labels or self.col_labels != other.col_labels:
            raise CompositionError(
                f"cannot add maps on different bases: {self.row_labels}/{self.col_labels}"
                f" vs {other.row_labels}/{other.col_labels}")
        ent = tuple(tuple(a + b for a, b in zip(r1, r2))
                    for r1, r2 in zip(self.entries, other.entries))
        return QMat(ent, self.row_labels, self.col_labels)

    def select_columns(self, indices: Sequence[int]) -> "QMat":
        ent = tuple(tuple(row[j] for j in indices) for row in self.entries)
        return QMat(ent, self.row_labels, tuple(self.col_labels[j] for j in indices))

    def relabeled(self, row_labels: Sequence[str] | None = None,
                  col_labels: Sequence[str] | None = None) -> "QMat":
        return QMat(self.entries,
                    tuple(row_labels) if row_labels is not None else self.row_labels,
                    tuple(col_labels) if col_labels is not None else self.col_labels)

    def __str__(self) -> str:
        head = "\t" + "\t".join(self.col_labels)
        body = "\n".join(lbl + "\t" + "\t".join(str(x) for x in row)
                         for lbl, row in zip(self.row_labels, self.entries))
        return head + "\n" + body


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan in place; returns the reduced rows and pivot column indices."""
    pivots: list[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: QMat) -> int:
    _, pivots = _echelon([list(row) for row in m.entries])
    return len(pivots)


def kernel_dim(m: QMat) -> int:
    return m.cols - rank(m)


def cokernel_dim(m: QMat) -> int:
    return m.rows - rank(m)


def compose(a: QMat, b: QMat) -> QMat:
    """Exact product ``a . b`` with the outer labels; inner labels must agree."""
    if a.col_labels != b.row_labels:
        raise CompositionError(
            f"inner bases differ: {a.col_labels} vs {b.row_labels}")
    ent = []
    for i in range(a.rows):
        arow = a.entries[i]
        out = []
        for j in range(b.cols):
            s = _ZERO
            for k in range(a.cols):
                if arow[k] != 0 and b.entries[k][j] != 0:
                    s += arow[k] * b.entries[k][j]
            out.append(s)
        ent.append(tuple(out))
    return QMat(tuple(ent), a.row_labels, b.col_labels)


def hstack(a: QMat, b: QMat) -> QMat:
    if a.row_labels != b.row_labels:
        raise CompositionError("hstack needs identical row bases")
    ent = tuple(r1 + r2 for r1, r2 in zip(a.entries, b.entries))
    return QMat(ent, a.row_labels, a.col_labels + b.col_labels)


def vstack(a: QMat, b: QMat) -> QMat:
    if a.col_labels != b.col_labels:
        raise CompositionError("vstack needs identical column bases")
    return QMat(a.entries + b.entries, a.row_labels + b.row_labels, a.col_labels)


def block_diag(a: QMat, b: QMat) -> QMat:
    top = hstack(a, QMat.zero(a.row_labels, b.col_labels))
    bot = hstack(QMat.zero(b.row_labels, a.col_labels), b)
    return vstack(top, bot)


def kernel_basis(m: QMat, label_prefix: str = "k") -> QMat:
    """Columns spanning ker(m), labeled ``{prefix}0``, ``{prefix}1``, ...

    Deterministic: the basis is read off the reduced echelon form, one vector
    per free column in increasing column order.
    """
    red, pivots = _echelon([list(row) for row in m.entries])
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    cols = []
    for f in free:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        cols.append(v)
    ent = tuple(tuple(col[i] for col in cols) for i in range(m.cols))
    labels = tuple(f"{label_prefix}{i}" for i in range(len(cols)))
    return QMat(ent, m.col_labels, labels)


def solve_exact(a: QMat, b: QMat) -> QMat:
    """One exact solution ``x`` of ``a . x = b`` (free variables set to zero).

    Raises InternalInconsistencyError when the system is inconsistent, which
    in this package always signals a broken assembly rather than bad input.
    """
    if a.row_labels != b.row_labels:
        raise CompositionError("solve needs matching target bases")
    aug = [list(ra) + list(rb) for ra, rb in zip(a.entries, b.entries)]
    if not aug:
        aug = []
    red, pivots = _echelon(aug) if aug else ([], [])
    for i, row in enumerate(red):
        if i < len(pivots):
            continue
        if any(x != 0 for x in row[a.cols:]):
            raise InternalInconsistencyError(
                "linear system has no solution; image not contained in span")
    for p in pivots:
        if p >= a.cols:
            raise InternalInconsistencyError(
                "linear system has no solution; image not contained in span")
    sol = [[_ZERO] * b.cols for _ in range(a.cols)]
    for i, p in enumerate(pivots):
        for j in range(b.cols):
            sol[p][j] = red[i][a.cols + j]
    return QMat(tuple(tuple(row) for row in sol), a.col_labels, b.col_labels)


def cokernel_pivots(m: QMat) -> tuple[int, ...]:
    """Indices of target basis vectors whose classes form a basis of coker(m)."""
    n, u = m.rows, m.cols
    aug = [list(m.entries[i]) + [_ONE if j == i else _ZERO for j in range(n)]
           for i in range(n)]
    _, pivots = _echelon(aug)
    return tuple(p - u for p in pivots if p >= u)


def quotient_projector(m: QMat) -> tuple[tuple[int, ...], QMat]:
    """Quotient basis indices S and the projection ``V -> V/im(m)``.

    The returned matrix has one row per retained index ``i``; applied to a
    coordinate vector of ``V`` it yields the coordinates of the class modulo
    ``im(m)`` in the basis ``{e_i + im(m) : i in S}``.
    """
    n, u = m.rows, m.cols
    aug = [list(m.entries[i]) + [_ONE if j == i else _ZERO for j in range(n)]
           for i in range(n)]
    _, pivots = _echelon(aug)
    img_cols = [p for p in pivots if p < u]
    s = tuple(p - u for p in pivots if p >= u)
    base_cols = [[m.entries[i][c] for i in range(n)] for c in img_cols]
    std_cols = [[_ONE if i == c else _ZERO for i in range(n)] for c in s]
    all_cols = base_cols + std_cols
    bmat = QMat(tuple(tuple(col[i] for col in all_cols) for i in range(n)),
                m.row_labels,
                tuple(f"im{i}" for i in range(len(img_cols)))
                + tuple(f"q{i}" for i in range(len(s))))
    inv = solve_exact(bmat, QMat.identity(m.row_labels))
    proj_rows = inv.entries[len(img_cols):]
    proj = QMat(proj_rows, tuple(m.row_labels[i] for i in s), m.row_labels)
    return s, proj


def induced_on_quotient(image_src: QMat, image_tgt: QMat, op: QMat) -> QMat:
    """Matrix of the map ``V/im(src) -> V'/im(tgt)`` induced by ``op: V -> V'``.

    Verifies that ``op`` really maps ``im(src)`` into ``im(tgt)``; a failure
    raises InternalInconsistencyError because it means the operator was not
    compatible with the exact sequence it is being pushed through.
    """
    if image_src.row_labels != op.col_labels:
        raise CompositionError("source image lives in a different space than op's source")
    if image_tgt.row_labels != op.row_labels:
        raise CompositionError("target image lives in a different space than op's target")
    s, _ = quotient_projector(image_src)
    s_t, proj_t = quotient_projector(image_tgt)
    if image_src.cols:
        pushed = compose(proj_t, compose(op, image_src))
        if not pushed.is_zero():
            raise InternalInconsistencyError(
                f"operator does not descend to the quotient: {op.row_labels}")
    restricted = op.select_columns(list(s))
    result = compose(proj_t, restricted)
    return result.relabeled(row_labels=[op.row_labels[i] for i in s_t],
                            col_labels=[op.col_labels[i] for i in s])


def induced_on_kernel(kernel_src: QMat, kernel_tgt: QMat, op: QMat) -> QMat:
    """Matrix of ``op`` restricted to kernels, in the given kernel bases."""
    if kernel_src.row_labels != op.col_labels:
        raise CompositionError("source kernel lives in a different space than op's source")
    if kernel_tgt.row_labels != op.row_labels:
        raise CompositionError("target kernel lives in a different space than op's target")
    pushed = compose(op, kernel_src)
    return solve_exact(kernel_tgt, pushed)
