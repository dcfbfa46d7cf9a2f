"""Vectors, planes and adapted frames on R^(2n) with the block complex structure.

The metric is the identity in every frame used here, so inner products are
plain euclidean dot products and the fundamental 2-form g(X, JY) has matrix J.
A 2-plane is holomorphic when J maps it to itself and antiholomorphic when J
maps it to its orthogonal complement; for a spanning pair (x, y) the second
condition reduces to g(x, Jy) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePlane, DegenerateSample, DimensionTooSmall, ShapeError

HOLOMORPHIC = "holomorphic"
ANTIHOLOMORPHIC = "antiholomorphic"
GENERIC = "generic"

_MAX_RETRIES = 100


@dataclass(frozen=True, eq=False)
class AdaptedStructure:
    """Almost Hermitian data in an adapted orthonormal frame: g = identity."""

    n: int
    dim: int
    J: np.ndarray


@dataclass(frozen=True, eq=False)
class PlanePair:
    """Spanning pair of a 2-plane together with its classification label."""

    x: np.ndarray
    y: np.ndarray
    kind: str


def standard_structure(n: int) -> AdaptedStructure:
    """Canonical structure on R^(2n): J e_i = e_(n+i), J e_(n+i) = -e_i.

    J has exact 0/+-1 entries, J^2 = -I and J^T J = I.
    """
    if n < 2:
        raise DimensionTooSmall(f"complex dimension must be at least 2, got {n}")
    n = int(n)
    zero = np.zeros((n, n))
    eye = np.eye(n)
    J = np.block([[zero, -eye], [eye, zero]])
    return AdaptedStructure(n=n, dim=2 * n, J=J)


def evaluate4(T: np.ndarray, x, y, z, u) -> float:
    """Evaluate a rank-4 tensor on four vectors."""
    T = np.asarray(T)
    if T.ndim != 4 or len(set(T.shape)) != 1:
        raise ShapeError(f"expected a rank-4 tensor with equal axes, got shape {T.shape}")
    dim = T.shape[0]
    for v in (x, y, z, u):
        if np.shape(v) != (dim,):
            raise ShapeError(f"vector shape {np.shape(v)} does not match tensor axis {dim}")
    return float(np.einsum("ijkl,i,j,k,l->", T, x, y, z, u))


def sample_unit_vector(rng: np.random.Generator, structure: AdaptedStructure) -> np.ndarray:
    """Uniform random unit vector (normalized gaussian)."""
    for _ in range(_MAX_RETRIES):
        v = rng.standard_normal(structure.dim)
        norm = np.linalg.norm(v)
        if norm > 1e-12:
            return v / norm
    raise DegenerateSample("could not draw a nonzero gaussian vector")


def sample_antiholomorphic_pair(rng: np.random.Generator,
                                structure: AdaptedStructure) -> PlanePair:
    """Orthonormal pair (x, y) with g(x, y) = g(x, Jy) = 0.

    y is a gaussian draw projected off span{x, Jx}; draws whose residual is
    numerically negligible are retried.
    """
    x = sample_unit_vector(rng, structure)
    Jx = structure.J @ x
    for _ in range(_MAX_RETRIES):
        raw = rng.standard_normal(structure.dim)
        y = raw - (raw @ x) * x - (raw @ Jx) * Jx
        norm = np.linalg.norm(y)
        if norm >= 1e-12:
            return PlanePair(x=x, y=y / norm, kind=ANTIHOLOMORPHIC)
    raise DegenerateSample("projection off span{x, Jx} degenerated repeatedly")


def classify_plane(x, y, structure: AdaptedStructure, tol: float = 1e-9) -> str:
    """Classify span{x, y} as holomorphic, antiholomorphic or generic.

    The pair is orthonormalized first; with y' the unit part of y orthogonal
    to x, the plane is J-invariant iff |g(x, Jy')| = 1 and antiholomorphic
    iff g(x, Jy') = 0.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != (structure.dim,) or y.shape != (structure.dim,):
        raise ShapeError("spanning vectors must match the structure dimension")
    nx = np.linalg.norm(x)
    ny = np.linalg.norm(y)
    if nx <= tol or ny <= tol:
        raise DegeneratePlane("zero spanning vector")
    xh = x / nx
    yp = y - (y @ xh) * xh
    npy = np.linalg.norm(yp)
    if npy <= tol * ny:
        raise DegeneratePlane("spanning vectors are linearly dependent")
    omega = abs(xh @ (structure.J @ (yp / npy)))
    if omega <= tol:
        return ANTIHOLOMORPHIC
    if omega >= 1.0 - tol:
        return HOLOMORPHIC
    return GENERIC


def adapted_frame_from_complex(q: np.ndarray, structure: AdaptedStructure) -> np.ndarray:
    """Real 2n x 2n frame matrix built from a unitary n x n matrix q.

    Column i (i < n) is [Re q[:, i]; Im q[:, i]]; column n+i is exactly
    J applied to column i.  For q = I this is the canonical basis.
    """
    n = structure.n
    if q.shape != (n, n):
        raise ShapeError(f"expected a {n} x {n} complex matrix, got {q.shape}")
    frame = np.empty((structure.dim, structure.dim))
    frame[:n, :n] = q.real
    frame[n:, :n] = q.imag
    frame[:, n:] = structure.J @ frame[:, :n]
    return frame


def random_adapted_frame(rng: np.random.Generator,
                         structure: AdaptedStructure) -> np.ndarray:
    """Random orthonormal frame (columns) whose second half is J times the first.

    Drawn by QR-orthonormalizing a complex gaussian matrix, so the frame
    commutes with J by construction.
    """
    n = structure.n
    for _ in range(_MAX_RETRIES):
        z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        q, r = np.linalg.qr(z)
        diag = np.abs(np.diag(r))
        if diag.min() > 1e-10 * max(diag.max(), 1.0):
            return adapted_frame_from_complex(q, structure)
    raise DegenerateSample("random complex matrix stayed rank deficient")
