"""Algebraic curvature tensors: symmetries, traces, operator blocks, Bochner tensor.

Conventions.  A curvature tensor R(X,Y,Z,U) is skew in (X,Y), skew in (Z,U)
and satisfies the first Bianchi identity (pair exchange symmetry follows).
The two Ricci-type traces over an orthonormal frame {E_i} are

    S(X,Y)  = sum_i R(X, E_i, E_i, Y)          (Ricci form)
    S'(X,Y) = sum_i R(X, E_i, J E_i, J Y)      (star Ricci form)

with scalar traces tau = tr S and tau' = tr S'.  For a symmetric bilinear
form Q the operator blocks are

    phi(Q) = g(X,U)Q(Y,Z) - g(X,Z)Q(Y,U) + g(Y,Z)Q(X,U) - g(Y,U)Q(X,Z)
    psi(Q) = g(X,JU)Q(Y,JZ) - g(X,JZ)Q(Y,JU) + g(Y,JZ)Q(X,JU) - g(Y,JU)Q(X,JZ)
             - 2 g(X,JY)Q(Z,JU) - 2 g(Z,JU)Q(X,JY)

and pi1 = phi(g)/2, pi2 = psi(g)/2 are the constant-curvature models.  psi
requires Q to commute with J (Q(JX,JY) = Q(X,Y)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (DegeneratePlane, DimensionTooSmall, InvalidArgument,
                     ShapeError)
from .structures import AdaptedStructure, evaluate4

__all__ = [
    "SymmetryReport", "apply_to_arguments", "j_conjugate", "tensor_norm",
    "validate_curvature_symmetries", "rk_residual", "project_curvature",
    "project_rk", "ricci", "star_ricci", "scalars", "phi", "psi", "pi1",
    "pi2", "bochner", "sectional", "holomorphic_sectional",
    "condition_residual",
]


def tensor_norm(T) -> float:
    """Frobenius norm of an array of any rank."""
    return float(np.linalg.norm(np.asarray(T).ravel()))


def _check_rank4(T) -> np.ndarray:
    T = np.asarray(T, dtype=float)
    if T.ndim != 4 or len(set(T.shape)) != 1:
        raise ShapeError(f"expected a rank-4 tensor with equal axes, got {T.shape}")
    return T


def apply_to_arguments(T: np.ndarray, A: np.ndarray) -> np.ndarray:
    """Pull a rank-4 tensor back along a linear map: T(A., A., A., A.)."""
    out = _check_rank4(T)
    for _ in range(4):
        # consume the leading axis, append the transformed one at the back
        out = np.tensordot(out, A, axes=([0], [0]))
    return out


def j_conjugate(T: np.ndarray, structure: AdaptedStructure) -> np.ndarray:
    """T(JX, JY, JZ, JU)."""
    return apply_to_arguments(T, structure.J)


@dataclass(frozen=True)
class SymmetryReport:
    """Residuals of the four curvature symmetries; verdicts live at the call site.

    Each residual is the max-abs entrywise distance to the nearest tensor
    with that property (the defect removed by the corresponding projector).
    """

    skew12: float
    skew34: float
    bianchi: float
    pair_symmetry: float
    tensor_norm: float

    def max_residual(self) -> float:
        return max(self.skew12, self.skew34, self.bianchi, self.pair_symmetry)

    def passes(self, tol: float = 1e-9) -> bool:
        return self.max_residual() <= tol * max(1.0, self.tensor_norm)


def validate_curvature_symmetries(T: np.ndarray) -> SymmetryReport:
    """Residuals of skewness, first Bianchi and pair exchange symmetry."""
    T = _check_rank4(T)
    skew12 = float(np.abs(T + T.transpose(1, 0, 2, 3)).max()) / 2.0
    skew34 = float(np.abs(T + T.transpose(0, 1, 3, 2)).max()) / 2.0
    bianchi = float(np.abs(T + T.transpose(1, 2, 0, 3)
                           + T.transpose(2, 0, 1, 3)).max()) / 3.0
    pair = float(np.abs(T - T.transpose(2, 3, 0, 1)).max()) / 2.0
    return SymmetryReport(skew12=skew12, skew34=skew34, bianchi=bianchi,
                          pair_symmetry=pair, tensor_norm=tensor_norm(T))


def rk_residual(T: np.ndarray, structure: AdaptedStructure) -> float:
    """Max-abs violation of T(JX,JY,JZ,JU) = T(X,Y,Z,U)."""
    return float(np.abs(_check_rank4(T) - j_conjugate(T, structure)).max())


def project_curvature(T: np.ndarray) -> np.ndarray:
    """Orthogonal projection onto tensors with all curvature symmetries.

    Antisymmetrizes both index pairs, symmetrizes pair exchange, then removes
    the fully antisymmetric (Bianchi-violating) part via
    B1(T) = T - (cyclic sum over the first three slots)/3.
    """
    T = _check_rank4(T)
    t = 0.5 * (T - T.transpose(1, 0, 2, 3))
    t = 0.5 * (t - t.transpose(0, 1, 3, 2))
    t = 0.5 * (t + t.transpose(2, 3, 0, 1))
    return t - (t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)) / 3.0


def project_rk(T: np.ndarray, structure: AdaptedStructure) -> np.ndarray:
    """Average with the J-pullback: the fixed space is the J-invariant class."""
    return 0.5 * (_check_rank4(T) + j_conjugate(T, structure))


def ricci(R: np.ndarray) -> np.ndarray:
    """S(X,Y) = sum_i R(X, E_i, E_i, Y)."""
    return np.einsum("xiiy->xy", _check_rank4(R))


def star_ricci(R: np.ndarray, structure: AdaptedStructure) -> np.ndarray:
    """S'(X,Y) = sum_i R(X, E_i, J E_i, J Y)."""
    J = structure.J
    return np.einsum("xiab,ai,by->xy", _check_rank4(R), J, J, optimize=True)


def scalars(R: np.ndarray, structure: AdaptedStructure):
    """(tau, tau') = traces of the two Ricci forms."""
    return float(np.trace(ricci(R))), float(np.trace(star_ricci(R, structure)))


def _check_symmetric(Q, tol):
    Q = np.asarray(Q, dtype=float)
    if Q.ndim != 2 or Q.shape[0] != Q.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {Q.shape}")
    if np.linalg.norm(Q - Q.T) > tol * max(1.0, np.linalg.norm(Q)):
        raise InvalidArgument("bilinear form is not symmetric within tolerance")
    return Q


def _phi_raw(Q: np.ndarray, eye: np.ndarray) -> np.ndarray:
    return (np.einsum("il,jk->ijkl", eye, Q) - np.einsum("ik,jl->ijkl", eye, Q)
            + np.einsum("jk,il->ijkl", eye, Q) - np.einsum("jl,ik->ijkl", eye, Q))


def _psi_raw(Q: np.ndarray, J: np.ndarray) -> np.ndarray:
    QJ = Q @ J
    return (np.einsum("il,jk->ijkl", J, QJ) - np.einsum("ik,jl->ijkl", J, QJ)
            + np.einsum("jk,il->ijkl", J, QJ) - np.einsum("jl,ik->ijkl", J, QJ)
            - 2.0 * np.einsum("ij,kl->ijkl", J, QJ)
            - 2.0 * np.einsum("kl,ij->ijkl", J, QJ))


def phi(Q: np.ndarray, structure: AdaptedStructure, tol: float = 1e-9) -> np.ndarray:
    """Kulkarni-Nomizu style product of a symmetric form with the metric."""
    Q = _check_symmetric(Q, tol)
    if Q.shape[0] != structure.dim:
        raise ShapeError("form dimension does not match the structure")
    return _phi_raw(Q, np.eye(structure.dim))


def psi(Q: np.ndarray, structure: AdaptedStructure, tol: float = 1e-9) -> np.ndarray:
    """J-twisted companion of phi; Q must satisfy Q(JX,JY) = Q(X,Y)."""
    Q = _check_symmetric(Q, tol)
    if Q.shape[0] != structure.dim:
        raise ShapeError("form dimension does not match the structure")
    J = structure.J
    if np.linalg.norm(J.T @ Q @ J - Q) > tol * max(1.0, np.linalg.norm(Q)):
        raise InvalidArgument("form does not commute with J within tolerance")
    return _psi_raw(Q, J)


def pi1(structure: AdaptedStructure) -> np.ndarray:
    """Constant-curvature model: g(X,U)g(Y,Z) - g(X,Z)g(Y,U)."""
    eye = np.eye(structure.dim)
    return np.einsum("il,jk->ijkl", eye, eye) - np.einsum("ik,jl->ijkl", eye, eye)


def pi2(structure: AdaptedStructure) -> np.ndarray:
    """J-twisted model: g(X,JU)g(Y,JZ) - g(X,JZ)g(Y,JU) - 2 g(X,JY)g(Z,JU)."""
    J = structure.J
    return (np.einsum("il,jk->ijkl", J, J) - np.einsum("ik,jl->ijkl", J, J)
            - 2.0 * np.einsum("ij,kl->ijkl", J, J))


def bochner(R: np.ndarray, structure: AdaptedStructure, tol: float = 1e-8) -> np.ndarray:
    """Bochner tensor of a J-invariant curvature tensor, n >= 3.

    B = R - (phi+psi)(S+3S')/(8(n+2)) - (3phi-psi)(S-S')/(8(n-2))
          + (tau+3tau')(pi1+pi2)/(16(n+1)(n+2))
          + (tau-tau')(3pi1-pi2)/(16(n-1)(n-2))

    Both Ricci traces of the result vanish identically.
    """
    n = structure.n
    if n <= 2:
        raise DimensionTooSmall(f"the Bochner tensor needs n >= 3, got n = {n}")
    R = _check_rank4(R)
    norm = tensor_norm(R)
    if rk_residual(R, structure) > tol * max(1.0, norm):
        raise InvalidArgument("tensor is not J-invariant within tolerance")
    S = ricci(R)
    Sst = star_ricci(R, structure)
    tau = float(np.trace(S))
    taust = float(np.trace(Sst))
    eye = np.eye(structure.dim)
    J = structure.J
    q1 = S + 3.0 * Sst
    q2 = S - Sst
    p1 = pi1(structure)
    p2 = pi2(structure)
    return (R
            - (_phi_raw(q1, eye) + _psi_raw(q1, J)) / (8.0 * (n + 2))
            - (3.0 * _phi_raw(q2, eye) - _psi_raw(q2, J)) / (8.0 * (n - 2))
            + (tau + 3.0 * taust) / (16.0 * (n + 1) * (n + 2)) * (p1 + p2)
            + (tau - taust) / (16.0 * (n - 1) * (n - 2)) * (3.0 * p1 - p2))


def sectional(R: np.ndarray, x, y) -> float:
    """Sectional curvature R(x,y,y,x) / (|x|^2 |y|^2 - g(x,y)^2)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    denom = (x @ x) * (y @ y) - (x @ y) ** 2
    if denom <= 1e-12 * max(1.0, (x @ x) * (y @ y)):
        raise DegeneratePlane("spanning pair is numerically dependent")
    return evaluate4(R, x, y, y, x) / denom


def holomorphic_sectional(R: np.ndarray, x, structure: AdaptedStructure) -> float:
    """H(x) = R(x, Jx, Jx, x) for a unit vector x."""
    x = np.asarray(x, dtype=float)
    if abs(np.linalg.norm(x) - 1.0) > 1e-9:
        raise InvalidArgument("holomorphic sectional curvature expects a unit vector")
    Jx = structure.J @ x
    return evaluate4(R, x, Jx, Jx, x)


def condition_residual(R: np.ndarray, structure: AdaptedStructure,
                       lam: float, mu: float, nu: float,
                       sample_count: int, rng: np.random.Generator):
    """Plane-independence diagnostic of the antiholomorphic invariant.

    Samples antiholomorphic orthonormal pairs (x, y) and evaluates

        v = lam*R(x,y,y,x) + mu*(S(x,x)+S(y,y)) + nu*(S'(x,x)+S'(y,y)).

    Returns (c_est, max_dev): the sample mean and the maximum absolute
    deviation from it.
    """
    from .structures import sample_antiholomorphic_pair

    if lam == 0.0 and mu == 0.0 and nu == 0.0:
        raise InvalidArgument("at least one of lam, mu, nu must be nonzero")
    if sample_count < 2:
        raise InvalidArgument("need at least two sampled planes")
    R = _check_rank4(R)
    S = ricci(R)
    Sst = star_ricci(R, structure)
    values = np.empty(sample_count)
    for k in range(sample_count):
        pair = sample_antiholomorphic_pair(rng, structure)
        x, y = pair.x, pair.y
        values[k] = (lam * evaluate4(R, x, y, y, x)
                     + mu * (x @ S @ x + y @ S @ y)
                     + nu * (x @ Sst @ x + y @ Sst @ y))
    c_est = float(values.mean())
    max_dev = float(np.abs(values - c_est).max())
    return c_est, max_dev
