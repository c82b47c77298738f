"""Lyubeznik numbers of cones, from a perverse presentation and an ample selection.

For ``k >= 2`` the entry at ``(k, j)`` is the dimension of degree ``k-1``
cohomology of the punctured cone with coefficients in the restricted j-th
piece; on the weight-graded level that is

    coker(class: piece(j-1) degree k-2 -> degree k)
  + ker(class:  piece(j-1) degree k-1 -> degree k+1),

both computed weightwise.  Entries with ``k < 2`` have no such formula and
are never invented: tables report them as n/a, except in the pure case,
where the entries ``(0, j)`` follow from the duality relation
``entry(k, d+1) = entry(0, d+2-k) + [k == d+1]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .atoms import PerversePresentation
from .constructions import gysin_split
from .errors import (InternalInconsistencyError, LyuconeError,
                     OutOfRangeError, PreconditionError)
from .graded import GradedOp, op_cokernel_dim_at, op_kernel_dim_at
from . import qlinalg

TAG_KERNEL_COKERNEL = "kernel-cokernel"
TAG_DUALITY = "duality-relation"


@dataclass(frozen=True)
class LyubeznikTable:
    """Computed entries over a (k, j) window; absent keys read as n/a."""

    space: str
    ample: str
    d: int
    krange: tuple[int, int]
    jrange: tuple[int, int]
    entries: dict[tuple[int, int], int]
    tags: dict[tuple[int, int], str] = field(default_factory=dict)

    def value(self, k: int, j: int) -> int | None:
        return self.entries.get((k, j))

    def nonzero(self) -> list[tuple[int, int, int]]:
        return sorted((k, j, v) for (k, j), v in self.entries.items() if v)

    def same_values(self, other: "LyubeznikTable") -> bool:
        return self.entries == other.entries


@dataclass(frozen=True)
class DependenceReport:
    """Two tables side by side, their differing entries, and the verdict."""

    space: str
    ample_a: str
    ample_b: str
    table_a: LyubeznikTable
    table_b: LyubeznikTable
    diff: tuple[tuple[int, int, int, int], ...]
    verdict: bool
    pure_converse_consistent: bool | None


@dataclass(frozen=True)
class ParityReport:
    """Odd/even weight bookkeeping of the kernel/cokernel quantities.

    ``mu_odd[name]`` is the odd-weight part of (cokernel at k0) plus
    (kernel at k0-1) for that selection; the deltas compare the two
    selections.  Curve metadata is carried through from the construction
    when present.
    """

    space: str
    k0: int
    j0: int
    ample_a: str
    ample_b: str
    mu_odd: dict[str, int]
    mu_even: dict[str, int]
    delta_odd: int
    delta_even: int
    genus: int | None = None
    curve_degree: int | None = None
    delta2: int | None = None


def lambda_kj(p: PerversePresentation, ample: str, k: int, j: int) -> int:
    """One Lyubeznik number of the cone over ``p`` embedded by ``ample``."""
    if k < 2:
        raise OutOfRangeError(
            f"no formula for entries with k < 2 (got k={k}); "
            "pure presentations derive the k=0 row via pure_case_table")
    if j < 1:
        return 0
    piece = p.piece(j - 1)
    if piece is None:
        return 0
    op = p.op(ample, j - 1)
    return op_cokernel_dim_at(op, k) + op_kernel_dim_at(op, k - 1)


def lambda_via_gysin_split(p: PerversePresentation, ample: str, k: int, j: int) -> int:
    """Same number through the split of the Euler-class sequence (second route)."""
    if k < 2:
        raise OutOfRangeError("no formula for entries with k < 2")
    piece = p.piece(j - 1)
    if piece is None or j < 1:
        return 0
    split = gysin_split(piece, p.op(ample, j - 1))
    return split.assembled.dim(k - 1)


def _default_ranges(p: PerversePresentation) -> tuple[tuple[int, int], tuple[int, int]]:
    return (2, 2 * p.dim + 2), (1, p.dim + 1)


def lambda_table(p: PerversePresentation, ample: str,
                 krange: tuple[int, int] | None = None,
                 jrange: tuple[int, int] | None = None) -> LyubeznikTable:
    """All entries over the window; defaults k in [2, 2d+2], j in [1, d+1]."""
    dk, dj = _default_ranges(p)
    krange = krange or dk
    jrange = jrange or dj
    if krange[0] < 2 or krange[1] > 2 * p.dim + 2:
        raise OutOfRangeError(
            f"table k-range must lie within [2, {2 * p.dim + 2}], got {krange}")
    entries = {}
    tags = {}
    for k in range(krange[0], krange[1] + 1):
        for j in range(jrange[0], jrange[1] + 1):
            entries[(k, j)] = lambda_kj(p, ample, k, j)
            tags[(k, j)] = TAG_KERNEL_COKERNEL
    return LyubeznikTable(p.name, ample, p.dim, krange, jrange, entries, tags)


def pure_case_table(p: PerversePresentation, ample: str) -> LyubeznikTable:
    """Table for a single-piece presentation, with the k=0 row filled in.

    Computes the ``j = d+1`` column for ``k`` in ``[2, d+1]``, then reads
    the ``(0, j)`` entries off the duality relation
    ``entry(k, d+1) = entry(0, d+2-k) + [k == d+1]``; everything else in
    the window is zero.  A negative derived entry means the presentation is
    broken and raises rather than reports.
    """
    if not p.pure:
        raise PreconditionError("pure_case_table needs a single-piece presentation")
    d = p.dim
    entries: dict[tuple[int, int], int] = {}
    tags: dict[tuple[int, int], str] = {}
    for k in range(2, d + 2):
        for j in range(1, d + 2):
            entries[(k, j)] = lambda_kj(p, ample, k, j)
            tags[(k, j)] = TAG_KERNEL_COKERNEL
    for j in range(1, d + 2):
        entries[(0, j)] = 0
        tags[(0, j)] = TAG_DUALITY
    for k in range(2, d + 2):
        derived = entries[(k, d + 1)] - (1 if k == d + 1 else 0)
        if derived < 0:
            raise InternalInconsistencyError(
                f"duality relation gives a negative entry at (0, {d + 2 - k})")
        entries[(0, d + 2 - k)] = derived
    return LyubeznikTable(p.name, ample, d, (0, d + 1), (1, d + 1), entries, tags)


def dependence_report(p: PerversePresentation, ample_a: str, ample_b: str,
                      krange: tuple[int, int] | None = None,
                      jrange: tuple[int, int] | None = None) -> DependenceReport:
    """Tables for two selections, their differing entries, and the verdict.

    The verdict is true exactly when some computed entry (all have k >= 2)
    differs.  For pure presentations the kernel/cokernel quantities *are*
    the table entries, so a difference in one is a difference in the other;
    the consistency of that equivalence is recorded.
    """
    ta = lambda_table(p, ample_a, krange, jrange)
    tb = lambda_table(p, ample_b, krange, jrange)
    diff = tuple((k, j, ta.entries[(k, j)], tb.entries[(k, j)])
                 for (k, j) in sorted(ta.entries)
                 if ta.entries[(k, j)] != tb.entries[(k, j)])
    verdict = bool(diff)
    converse = None
    if p.pure:
        converse = (not ta.same_values(tb)) == verdict
    return DependenceReport(p.name, ample_a, ample_b, ta, tb, diff, verdict, converse)


def _mu_parity(p: PerversePresentation, ample: str, k: int, j_piece: int,
               parity: int) -> int:
    """Weight-parity part of coker at degree k plus kernel at k-1."""
    piece = p.piece(j_piece)
    if piece is None:
        return 0
    op = p.op(ample, j_piece)
    total = 0
    for (kk, w) in piece.support():
        if w % 2 != parity:
            continue
        if kk == k:
            total += piece.dim_at(kk, w) - qlinalg.rank(op.block(k - 2, w - 2))
        if kk == k - 1:
            total += qlinalg.kernel_dim(op.block(kk, w))
    return total


def parity_report(p: PerversePresentation, ample_a: str, ample_b: str,
                  k0: int, j0: int) -> ParityReport:
    """Odd/even split of the dependence quantity at one position.

    Requires the presentation to have the piece ``j0 - 1``.  The deltas are
    the absolute differences of the odd (resp. even) parts between the two
    selections; additivity ``odd + even = full entry`` holds by
    construction and is what the invariant tests pin down.
    """
    if p.piece(j0 - 1) is None:
        raise PreconditionError(f"{p.name} has no piece {j0 - 1}")
    mu_odd = {}
    mu_even = {}
    for aname in (ample_a, ample_b):
        mu_odd[aname] = _mu_parity(p, aname, k0, j0 - 1, 1)
        mu_even[aname] = _mu_parity(p, aname, k0, j0 - 1, 0)
    return ParityReport(
        space=p.name, k0=k0, j0=j0, ample_a=ample_a, ample_b=ample_b,
        mu_odd=mu_odd, mu_even=mu_even,
        delta_odd=abs(mu_odd[ample_a] - mu_odd[ample_b]),
        delta_even=abs(mu_even[ample_a] - mu_even[ample_b]),
        genus=p.conventions.get("genus_E"),
        curve_degree=p.conventions.get("deg_E"),
        delta2=p.conventions.get("delta2"),
    )
