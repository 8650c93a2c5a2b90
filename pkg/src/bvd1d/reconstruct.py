"""Candidate reconstructions: 5th-order WENO-Z polynomial and THINC sigmoid.

Both reconstructions map cell averages to a pair of boundary values per
cell: the value the in-cell profile takes at the cell's left face x_{i-1/2}
and at its right face x_{i+1/2}. All kernels broadcast, so the same code
serves the scalar per-cell operations and the vectorized whole-field paths
(periodic indexing via np.roll).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

# Regularization constants. Three distinct epsilons are in play across the
# package: the WENO-Z weight guard below, the THINC division guard in
# ThincParams, and the smoothness-indicator guard in bvd.BVD3_EPS.
WENO_Z_EPS = 1e-40

# Linear (optimal) weights of the three quadratic sub-stencils.
_D0, _D1, _D2 = 0.1, 0.6, 0.3

# Cap on the THINC exponent argument. Admissible cells satisfy
# |beta*(2C-1)| <= beta, far below the cap for any practical steepness, so
# consumed values are never affected; the cap only keeps boundary values
# finite for the degenerate inputs that the admissibility test rejects.
_THINC_EXP_CAP = 25.0


class BoundaryPair(NamedTuple):
    """Reconstructed values at a cell's own faces (left = x_{i-1/2})."""

    left: float
    right: float


@dataclass(frozen=True)
class ThincParams:
    """Sigmoid-reconstruction parameters: jump steepness and division guard."""

    beta: float = 1.8
    eps: float = 1e-20

    def __post_init__(self) -> None:
        if self.beta <= 0.0:
            raise ValueError("beta must be positive")
        if self.eps <= 0.0:
            raise ValueError("eps must be positive")


def _wenoz_downwind(m2, m1, c, p1, p2):
    """WENO-Z value at the downwind face x_{i+1/2} of the center cell.

    Upwind-biased blend of the three quadratic sub-stencil extrapolations,
    weighted by the tau5-enhanced nonlinear weights.
    """
    b0 = 13.0 / 12.0 * (m2 - 2.0 * m1 + c) ** 2 + 0.25 * (m2 - 4.0 * m1 + 3.0 * c) ** 2
    b1 = 13.0 / 12.0 * (m1 - 2.0 * c + p1) ** 2 + 0.25 * (m1 - p1) ** 2
    b2 = 13.0 / 12.0 * (c - 2.0 * p1 + p2) ** 2 + 0.25 * (3.0 * c - 4.0 * p1 + p2) ** 2
    tau5 = np.abs(b0 - b2)
    a0 = _D0 * (1.0 + tau5 / (b0 + WENO_Z_EPS))
    a1 = _D1 * (1.0 + tau5 / (b1 + WENO_Z_EPS))
    a2 = _D2 * (1.0 + tau5 / (b2 + WENO_Z_EPS))
    v0 = (2.0 * m2 - 7.0 * m1 + 11.0 * c) / 6.0
    v1 = (-m1 + 5.0 * c + 2.0 * p1) / 6.0
    v2 = (2.0 * c + 5.0 * p1 - p2) / 6.0
    return (a0 * v0 + a1 * v1 + a2 * v2) / (a0 + a1 + a2)


def weno_z_pair(stencil5) -> BoundaryPair:
    """Boundary pair from a 5-cell stencil [q_{i-2}..q_{i+2}].

    The right value is the standard upwind-biased reconstruction at
    x_{i+1/2}; the left value applies the same formula to the reversed
    stencil (mirror symmetry).
    """
    m2, m1, c, p1, p2 = (float(v) for v in stencil5)
    right = _wenoz_downwind(m2, m1, c, p1, p2)
    left = _wenoz_downwind(p2, p1, c, m1, m2)
    return BoundaryPair(float(left), float(right))


def weno_z_field(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-cell WENO-Z boundary pairs over a periodic field.

    Returns (left, right) arrays congruent with `values`.
    """
    m2 = np.roll(values, 2)
    m1 = np.roll(values, 1)
    p1 = np.roll(values, -1)
    p2 = np.roll(values, -2)
    right = _wenoz_downwind(m2, m1, values, p1, p2)
    left = _wenoz_downwind(p2, p1, values, m1, m2)
    return left, right


def _thinc_faces(qm, qc, qp, beta: float, eps: float):
    """Closed-form sigmoid boundary values from the three-cell neighborhood.

    The in-cell profile is a tanh ramp between the neighbor averages whose
    jump-center position is fixed by cell-average consistency; the boundary
    values below are its exact face evaluations, no root solve needed.
    """
    qmin = np.minimum(qm, qp)
    qmax = np.maximum(qm, qp) - qmin
    theta = np.sign(qp - qm)
    ratio = (qc - qmin + eps) / (qmax + eps)
    arg = np.clip(theta * beta * (2.0 * ratio - 1.0), -_THINC_EXP_CAP, _THINC_EXP_CAP)
    scaled = np.exp(arg) / np.cosh(beta)
    tb = np.tanh(beta)
    a = (scaled - 1.0) / tb
    # 1 + a*tanh(beta) equals `scaled` exactly in real arithmetic; restore it
    # where rounding collapses the sum to zero (saturated inadmissible cells).
    denom = 1.0 + a * tb
    denom = np.where(denom > 0.0, denom, scaled)
    left = qmin + 0.5 * qmax * (1.0 + theta * a)
    right = qmin + 0.5 * qmax * (1.0 + theta * (tb + a) / denom)
    return left, right


def thinc_pair(q_im1: float, q_i: float, q_ip1: float, params: ThincParams) -> BoundaryPair:
    """THINC boundary pair for one cell from its three-cell neighborhood."""
    left, right = _thinc_faces(
        float(q_im1), float(q_i), float(q_ip1), params.beta, params.eps
    )
    return BoundaryPair(float(left), float(right))


def thinc_field(values: np.ndarray, params: ThincParams) -> tuple[np.ndarray, np.ndarray]:
    """Per-cell THINC boundary pairs over a periodic field."""
    qm = np.roll(values, 1)
    qp = np.roll(values, -1)
    return _thinc_faces(qm, values, qp, params.beta, params.eps)


def _admissible(qm, qc, qp, delta: float, eps: float):
    qmin = np.minimum(qm, qp)
    qmax = np.maximum(qm, qp) - qmin
    ratio = (qc - qmin + eps) / (qmax + eps)
    monotone = (qp - qc) * (qc - qm) > 0.0
    return (ratio > delta) & (ratio < 1.0 - delta) & monotone


def thinc_admissible(
    q_im1: float, q_i: float, q_ip1: float, delta: float, eps: float = 1e-20
) -> bool:
    """Whether the sigmoid fit is usable in this cell.

    Requires the cell average to sit strictly inside the neighbor range
    (delta < C < 1-delta for the normalized position C of thinc_pair) and
    the local data to be strictly monotone. Cells failing either condition
    keep the polynomial reconstruction.
    """
    if not 0.0 < delta < 0.5:
        raise ValueError("delta must lie in (0, 0.5)")
    return bool(_admissible(float(q_im1), float(q_i), float(q_ip1), delta, eps))


def thinc_admissible_field(
    values: np.ndarray, delta: float, eps: float = 1e-20
) -> np.ndarray:
    """Vectorized admissibility mask over a periodic field."""
    if not 0.0 < delta < 0.5:
        raise ValueError("delta must lie in (0, 0.5)")
    qm = np.roll(values, 1)
    qp = np.roll(values, -1)
    return _admissible(qm, values, qp, delta, eps)
