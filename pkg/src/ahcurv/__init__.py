"""Pointwise curvature algebra for almost Hermitian structures.

Tools for algebraic curvature tensors compatible with an orthogonal complex
structure: trace invariants, the Bochner tensor, constrained random samples,
and mechanical verification of the classification results they satisfy.
"""

from .curvature import (SymmetryReport, apply_to_arguments, bochner,
                        condition_residual, evaluate4, holomorphic_sectional,
                        j_conjugate, phi, pi1, pi2, project_curvature,
                        project_rk, psi, ricci, rk_residual, scalars,
                        sectional, star_ricci, tensor_norm,
                        validate_curvature_symmetries)
from .constraints import (ConstrainedSample, CorollaryReport, LemmaConfig,
                          LemmaKernelResult, RKBasis, ReplayReport,
                          TheoremReport, constrained_sample,
                          lemma_constraint_matrix, lemma_kernel,
                          lemma_kernel_dimension, pencil, random_rk_tensor,
                          replay_derivation, rk_basis, verify_corollary,
                          verify_theorem)
from .errors import (AhcurvError, DegeneratePlane, DegenerateSample,
                     DimensionTooSmall, FileFormatError,
                     HypothesisNotSatisfied, Inconclusive, InvalidArgument,
                     NoSolution, NumericalFailure, ShapeError)
from .linalg import (metric_proportionality_residual, nullspace_exact,
                     nullspace_float)
from .structures import (ANTIHOLOMORPHIC, GENERIC, HOLOMORPHIC,
                         AdaptedStructure, PlanePair,
                         adapted_frame_from_complex, classify_plane,
                         random_adapted_frame, sample_antiholomorphic_pair,
                         sample_unit_vector, standard_structure)
from .tensor_io import FORMAT, TensorFile, read_tensor_file, write_tensor_file

__version__ = "0.1.0"

__all__ = [
    "AdaptedStructure", "PlanePair", "standard_structure",
    "adapted_frame_from_complex", "random_adapted_frame", "classify_plane",
    "sample_unit_vector", "sample_antiholomorphic_pair",
    "HOLOMORPHIC", "ANTIHOLOMORPHIC", "GENERIC",
    "SymmetryReport", "validate_curvature_symmetries", "rk_residual",
    "project_curvature", "project_rk", "apply_to_arguments", "j_conjugate",
    "evaluate4", "tensor_norm", "ricci", "star_ricci", "scalars",
    "phi", "psi", "pi1", "pi2", "bochner", "sectional",
    "holomorphic_sectional", "condition_residual",
    "RKBasis", "rk_basis", "random_rk_tensor", "pencil",
    "ConstrainedSample", "constrained_sample",
    "TheoremReport", "verify_theorem",
    "CorollaryReport", "verify_corollary",
    "LemmaConfig", "LemmaKernelResult", "lemma_kernel",
    "lemma_kernel_dimension", "lemma_constraint_matrix",
    "ReplayReport", "replay_derivation",
    "nullspace_float", "nullspace_exact", "metric_proportionality_residual",
    "FORMAT", "TensorFile", "read_tensor_file", "write_tensor_file",
    "AhcurvError", "DimensionTooSmall", "ShapeError", "DegenerateSample",
    "DegeneratePlane", "InvalidArgument", "NoSolution", "NumericalFailure",
    "HypothesisNotSatisfied", "Inconclusive", "FileFormatError",
]
