"""Lyubeznik numbers of cones over complex projective schemes.

The pipeline: build a scheme as a perverse presentation (from the built-in
smooth atoms or the reducible constructions), pick ample selections, and
read kernel/cokernel dimensions of the Chern-class operators off the
weight-graded pieces.  All arithmetic is exact over the rationals.
"""

from .atoms import (PerversePresentation, SmoothAtom, SubvarietyData,
                    atom_product, blowup_ample_selection, blowup_p2, p1xp1,
                    plane_curve, plane_curve_in_p2, presentation_of_smooth,
                    projective_space)
from .constructions import (GysinSplitPieces, UnionClass, UnionInput,
                            equidim_x2, gysin_split, nc_union, nonequidim_x2,
                            perverse_product, union_two_smooth)
from .graded import GradedOp, TwistShift, WGVS, direct_sum, kunneth, twist
from .lyubeznik import (DependenceReport, LyubeznikTable, ParityReport,
                        dependence_report, lambda_kj, lambda_table,
                        parity_report, pure_case_table)
from .oracle import ChainComplex, exactness_audit, euler_check, homology_dims
from .qlinalg import QMat, Rat, cokernel_dim, compose, kernel_dim, rank

__version__ = "0.1.0"

__all__ = [
    "PerversePresentation", "SmoothAtom", "SubvarietyData", "atom_product",
    "blowup_ample_selection", "blowup_p2", "p1xp1", "plane_curve",
    "plane_curve_in_p2", "presentation_of_smooth", "projective_space",
    "GysinSplitPieces", "UnionClass", "UnionInput", "equidim_x2",
    "gysin_split", "nc_union", "nonequidim_x2", "perverse_product",
    "union_two_smooth", "GradedOp", "TwistShift", "WGVS", "direct_sum",
    "kunneth", "twist", "DependenceReport", "LyubeznikTable", "ParityReport",
    "dependence_report", "lambda_kj", "lambda_table", "parity_report",
    "pure_case_table", "ChainComplex", "exactness_audit", "euler_check",
    "homology_dims", "QMat", "Rat", "cokernel_dim", "compose", "kernel_dim",
    "rank",
]
