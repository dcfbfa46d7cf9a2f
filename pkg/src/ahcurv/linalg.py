"""Nullspace computations and small matrix diagnostics.

Float kernels come from the SVD with a relative singular-value threshold;
exact kernels use fraction-free integer elimination (rows are scaled to
integers and gcd-normalized after every update, which keeps entries small
while preserving the row space exactly).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .errors import InvalidArgument, ShapeError


def nullspace_float(A: np.ndarray, rel_threshold: float = 1e-10):
    """Orthonormal kernel basis of a dense float matrix.

    Returns (basis, smallest_retained) where basis has shape (ncols, k) and
    smallest_retained is the smallest singular value *above* the threshold
    (0.0 when the matrix is numerically zero).  A singular value s belongs to
    the kernel when s <= rel_threshold * s_max.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise InvalidArgument("matrix has non-finite entries")
    rows, cols = A.shape
    if rows == 0 or cols == 0:
        return np.eye(cols), 0.0
    u, s, vh = np.linalg.svd(A, full_matrices=True)
    smax = s[0] if len(s) else 0.0
    cutoff = rel_threshold * smax
    rank = int(np.sum(s > cutoff))
    basis = vh[rank:].T.copy()
    smallest_retained = float(s[rank - 1]) if rank > 0 else 0.0
    return basis, smallest_retained


def _row_to_ints(row):
    """Scale a sequence of Fractions/ints to coprime integers."""
    fracs = [Fraction(v) for v in row]
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return ints


class _ExactEchelon:
    """Incremental integer row echelon over a fixed number of columns.

    Rows may be fed one at a time; the running rank is exact.  Row updates
    use cross-multiplication followed by gcd normalization, so all entries
    stay integer and the row space is preserved.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots = {}  # leading column -> row (list of ints)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add_row(self, row) -> bool:
        """Reduce a row against the current pivots; returns True if rank grew."""
        work = [int(v) for v in row]
        if len(work) != self.ncols:
            raise ShapeError("row length does not match column count")
        for col in sorted(self.pivots):
            coef = work[col]
            if coef == 0:
                continue
            pivot = self.pivots[col]
            lead = pivot[col]
            work = [w * lead - p * coef for w, p in zip(work, pivot)]
        lead_col = next((i for i, v in enumerate(work) if v != 0), None)
        if lead_col is None:
            return False
        g = 0
        for v in work:
            g = gcd(g, abs(v))
        if g > 1:
            work = [v // g for v in work]
        if work[lead_col] < 0:
            work = [-v for v in work]
        self.pivots[lead_col] = work
        return True

    def kernel_dimension(self) -> int:
        return self.ncols - self.rank

    def kernel_basis(self):
        """Exact rational kernel basis, one vector per free column."""
        pivot_cols = sorted(self.pivots)
        free_cols = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for free in free_cols:
            vec = [Fraction(0)] * self.ncols
            vec[free] = Fraction(1)
            for col in reversed(pivot_cols):
                row = self.pivots[col]
                acc = sum((Fraction(row[c]) * vec[c] for c in range(col + 1, self.ncols)
                           if row[c] != 0 and vec[c] != 0), Fraction(0))
                vec[col] = -acc / row[col]
            basis.append(vec)
        return basis


def nullspace_exact(rows, ncols: int | None = None):
    """Exact kernel of a rational matrix given as an iterable of rows.

    Entries may be ints or Fractions.  Returns (dimension, basis) with the
    basis a list of Fraction vectors.  No tolerance is involved anywhere.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise InvalidArgument("cannot infer column count from an empty matrix")
        ncols = len(rows[0])
    ech = _ExactEchelon(ncols)
    for row in rows:
        ech.add_row(_row_to_ints(row))
    return ech.kernel_dimension(), ech.kernel_basis()


def metric_proportionality_residual(A: np.ndarray) -> float:
    """Relative distance of a symmetric matrix from multiples of the identity.

    ||A - (tr A / dim) I||_F / max(||A||_F, 1e-30); exactly 1.0 for traceless
    nonzero A and 0.0 for A = c*I.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {A.shape}")
    norm = np.linalg.norm(A)
    if np.linalg.norm(A - A.T) > 1e-9 * max(1.0, norm):
        raise InvalidArgument("matrix is not symmetric within 1e-9")
    dim = A.shape[0]
    dev = A - (np.trace(A) / dim) * np.eye(dim)
    return float(np.linalg.norm(dev) / max(norm, 1e-30))
