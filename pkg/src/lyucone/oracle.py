"""Independent brute-force validators.

Two kinds of cross-checks live here.  ``ChainComplex``/``homology_dims``
computes rational Betti numbers of tiny hand-built CW models (spheres,
surfaces, projective spaces) by straight rank computations, giving an
independent route to the dimension tables the graded machinery produces.
``exactness_audit`` replays a recorded long-exact-sequence window --
a list of dimensions and the ranks of the maps between them -- and checks
exactness at every position.  Constructions record such windows as they
assemble, and any derived number is only trusted (and frozen into the test
corpus) once its windows pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import qlinalg
from .errors import InvalidComplexError, PreconditionError
from .qlinalg import QMat


@dataclass(frozen=True)
class AuditWindow:
    """A finite window of an assembled long exact sequence.

    ``ranks`` has one more entry than ``dims``: ``ranks[i]`` is the rank of
    the map *into* position ``i`` and ``ranks[-1]`` the rank of the map out
    of the last position.
    """

    description: str
    dims: tuple[int, ...]
    ranks: tuple[int, ...]


def exactness_audit(dims: Sequence[int], ranks: Sequence[int]) -> bool:
    """True iff at each position dim = rank(in) + rank(out)."""
    if len(ranks) != len(dims) + 1:
        raise PreconditionError(
            f"window needs len(ranks) == len(dims) + 1, got {len(ranks)} vs {len(dims)}")
    if any(r < 0 for r in ranks) or any(d < 0 for d in dims):
        raise PreconditionError("negative dimensions or ranks in audit window")
    return all(dims[i] == ranks[i] + ranks[i + 1] for i in range(len(dims)))


def audit_window_passes(window: AuditWindow) -> bool:
    return exactness_audit(window.dims, window.ranks)


def run_audit_windows(presentation) -> list[tuple[str, bool]]:
    """Replay every window a construction recorded on a presentation."""
    return [(w.description, audit_window_passes(w)) for w in presentation.audits]


def euler_check(presentation) -> bool:
    """Piece Euler characteristics match the construction's predictions."""
    for j, expected in presentation.expected_euler.items():
        piece = presentation.pieces.get(j)
        got = 0 if piece is None else piece.euler()
        if got != expected:
            return False
    return True


@dataclass(frozen=True)
class ChainComplex:
    """A finite rational chain complex, checked to satisfy boundary^2 = 0.

    ``boundaries[i]`` is the boundary map from chains of dimension ``i+1``
    down to dimension ``i``.
    """

    dims: tuple[int, ...]
    boundaries: tuple[QMat, ...]

    def __post_init__(self):
        if len(self.boundaries) != max(len(self.dims) - 1, 0):
            raise InvalidComplexError("need one boundary map per adjacent pair")
        for i, b in enumerate(self.boundaries):
            if b.rows != self.dims[i] or b.cols != self.dims[i + 1]:
                raise InvalidComplexError(f"boundary {i + 1} has the wrong shape")
        for i in range(len(self.boundaries) - 1):
            if not qlinalg.compose(self.boundaries[i], self.boundaries[i + 1]).is_zero():
                raise InvalidComplexError(
                    f"boundary composite at dimension {i + 2} is nonzero")


def chain_complex(dims: Sequence[int],
                  boundaries: Sequence[Sequence[Sequence[int]]] | None = None) -> ChainComplex:
    """Build a complex from raw integer matrices (zero maps when omitted)."""
    dims = tuple(dims)
    mats = []
    for i in range(len(dims) - 1):
        rl = tuple(f"c{i}_{r}" for r in range(dims[i]))
        cl = tuple(f"c{i + 1}_{c}" for c in range(dims[i + 1]))
        if boundaries is None or boundaries[i] is None:
            mats.append(QMat.zero(rl, cl))
        else:
            mats.append(QMat.build(rl, cl, boundaries[i]))
    return ChainComplex(dims, tuple(mats))


def homology_dims(c: ChainComplex) -> list[int]:
    """dim H_i = dim ker(boundary out of i) - rank(boundary into i)."""
    n = len(c.dims)
    out = []
    for i in range(n):
        kernel = c.dims[i] if i == 0 else qlinalg.kernel_dim(c.boundaries[i - 1])
        image = qlinalg.rank(c.boundaries[i]) if i < n - 1 else 0
        out.append(kernel - image)
    return out


def point() -> ChainComplex:
    return chain_complex([1])


def circle() -> ChainComplex:
    return chain_complex([1, 1])


def sphere(n: int) -> ChainComplex:
    """Minimal CW sphere: one 0-cell and one n-cell."""
    if n == 0:
        return chain_complex([2])
    return chain_complex([1] + [0] * (n - 1) + [1])


def genus_surface(g: int) -> ChainComplex:
    """One vertex, 2g loops, one 2-cell glued along the product of commutators."""
    return chain_complex([1, 2 * g, 1])


def torus() -> ChainComplex:
    return genus_surface(1)


def cw_complex_projective_space(n: int) -> ChainComplex:
    """CP^n: one cell in every even dimension up to 2n."""
    dims = [1 if i % 2 == 0 else 0 for i in range(2 * n + 1)]
    return chain_complex(dims)
