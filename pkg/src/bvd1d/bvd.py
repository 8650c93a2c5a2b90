"""Hybridization of the WENO-Z and THINC candidates per cell.

All four selectors implement the same principle: prefer, cell by cell, the
candidate reconstruction that leaves the smaller jump between the two
reconstructed values meeting at each face (the boundary variation, BV).
Since the dissipation term of the interface flux is proportional to that
jump, shrinking it where a discontinuity lives removes most of the smearing
while leaving smooth regions to the high-order polynomial.

Face indexing convention: face j is x_{j+1/2}, sitting between cell j and
cell (j+1) % n. All per-face arrays use this layout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .reconstruct import ThincParams, thinc_admissible_field, thinc_field, weno_z_field

# Guard used by the smoothness indicator and the blend-weight denominator.
BVD3_EPS = 1e-16

# Enumeration order for candidate combinations at a face; ties keep the
# earliest entry, so the polynomial candidate wins any exact tie.
_FACE_COMBOS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass
class CandidateSet:
    """Per-cell boundary pairs of both candidates plus the admissibility mask.

    Cells where THINC is inadmissible carry the cell's WENO pair in the
    thinc_* slots, so any selector formula that touches a neighbor's THINC
    value automatically falls back to that neighbor's polynomial values.
    """

    weno_left: np.ndarray
    weno_right: np.ndarray
    thinc_left: np.ndarray
    thinc_right: np.ndarray
    admissible: np.ndarray

    @property
    def n_cells(self) -> int:
        return self.weno_left.shape[0]


@dataclass
class SelectionResult:
    """Outcome of one selector pass.

    omega is the per-cell THINC fraction: 0 is pure WENO, 1 pure THINC;
    the blending selector may produce intermediate values. face_left and
    face_right are the interface states q^L, q^R at face j (no further
    limiting is applied to them). n_clamped counts cells whose raw blend
    weight fell outside [0, 1] before clamping.
    """

    omega: np.ndarray
    face_left: np.ndarray
    face_right: np.ndarray
    n_clamped: int = 0

    @property
    def thinc_cells(self) -> int:
        """Cells where the THINC candidate contributes (omega > 0)."""
        return int(np.count_nonzero(self.omega > 0.0))


def build_candidates(
    values: np.ndarray, params: ThincParams, delta: float
) -> CandidateSet:
    """Evaluate both reconstructions and the admissibility test per cell."""
    wl, wr = weno_z_field(values)
    tl, tr = thinc_field(values, params)
    adm = thinc_admissible_field(values, delta, params.eps)
    return CandidateSet(
        weno_left=wl,
        weno_right=wr,
        thinc_left=np.where(adm, tl, wl),
        thinc_right=np.where(adm, tr, wr),
        admissible=adm,
    )


def assemble_interfaces(
    omega: np.ndarray, candidates: CandidateSet
) -> tuple[np.ndarray, np.ndarray]:
    """Interface states from per-cell blend weights.

    q^L at face j is the blended right-boundary value of cell j; q^R is the
    blended left-boundary value of cell j+1 (periodic wrap).
    """
    left_of_cell = omega * candidates.thinc_left + (1.0 - omega) * candidates.weno_left
    right_of_cell = omega * candidates.thinc_right + (1.0 - omega) * candidates.weno_right
    return right_of_cell, np.roll(left_of_cell, -1)


def _discrete_result(use_thinc: np.ndarray, candidates: CandidateSet) -> SelectionResult:
    """Result for the either/or selectors, using exact array picks."""
    face_left = np.where(use_thinc, candidates.thinc_right, candidates.weno_right)
    cell_left = np.where(use_thinc, candidates.thinc_left, candidates.weno_left)
    return SelectionResult(
        omega=use_thinc.astype(float),
        face_left=face_left,
        face_right=np.roll(cell_left, -1),
    )


def bvd1_select(candidates: CandidateSet) -> SelectionResult:
    """Two-stage face-pair minimization.

    Stage 1 finds, at every face, the candidate pair (own cell, neighbor
    cell) with the smallest absolute boundary variation, nominating a
    candidate for each adjacent cell. Stage 2 reconciles the two per-cell
    nominations: agreement is honored, and a conflict falls back to WENO
    exactly when the two signed minimizing variations have opposite signs.
    """
    n = candidates.n_cells
    own = (candidates.weno_right, candidates.thinc_right)
    nbr = (np.roll(candidates.weno_left, -1), np.roll(candidates.thinc_left, -1))
    adm_own = candidates.admissible
    adm_nbr = np.roll(candidates.admissible, -1)

    signed = np.stack([own[xi] - nbr[eta] for xi, eta in _FACE_COMBOS])
    allowed = np.stack(
        [
            np.ones(n, dtype=bool) if xi == 0 else adm_own
            for xi, _ in _FACE_COMBOS
        ]
    ) & np.stack(
        [
            np.ones(n, dtype=bool) if eta == 0 else adm_nbr
            for _, eta in _FACE_COMBOS
        ]
    )
    magnitude = np.where(allowed, np.abs(signed), np.inf)
    best = np.argmin(magnitude, axis=0)  # first minimum in combo order

    combo_own = np.array([xi for xi, _ in _FACE_COMBOS], dtype=bool)
    combo_nbr = np.array([eta for _, eta in _FACE_COMBOS], dtype=bool)
    cols = np.arange(n)
    nominate_from_right = combo_own[best]          # for cell j, via face j
    nominate_from_left = np.roll(combo_nbr[best], 1)  # for cell j, via face j-1
    signed_right = signed[best, cols]
    signed_left = np.roll(signed_right, 1)

    agree = nominate_from_right == nominate_from_left
    conflict_takes_weno = signed_right * signed_left < 0.0
    use_thinc = np.where(agree, nominate_from_right, ~conflict_takes_weno)
    return _discrete_result(use_thinc & candidates.admissible, candidates)


def bvd2_select(candidates: CandidateSet) -> SelectionResult:
    """Minimum total boundary variation over all neighbor combinations.

    For each own candidate, the total variation across the cell's two faces
    is minimized over the four neighbor-candidate combinations; THINC is
    kept only where its minimum beats WENO's strictly.
    """
    to_left_face = (np.roll(candidates.weno_right, 1), np.roll(candidates.thinc_right, 1))
    to_right_face = (np.roll(candidates.weno_left, -1), np.roll(candidates.thinc_left, -1))

    def min_total(own_left: np.ndarray, own_right: np.ndarray) -> np.ndarray:
        totals = [
            np.abs(to_left_face[a] - own_left) + np.abs(to_right_face[b] - own_right)
            for a, b in _FACE_COMBOS
        ]
        return np.minimum.reduce(totals)

    m_weno = min_total(candidates.weno_left, candidates.weno_right)
    m_thinc = min_total(candidates.thinc_left, candidates.thinc_right)
    use_thinc = (m_thinc < m_weno) & candidates.admissible
    return _discrete_result(use_thinc, candidates)


def bvd3_select(
    candidates: CandidateSet,
    averages: np.ndarray,
    s_cutoff: float = 1e6,
    eps3: float = BVD3_EPS,
) -> SelectionResult:
    """Smoothness-gated blending of the two candidates.

    Cells flagged non-smooth (normalized fourth-power boundary variation of
    the WENO reconstruction, turned into an indicator S < s_cutoff) blend
    THINC into WENO with the weight that minimizes the squared mismatch to
    the neighbors' WENO face values; the quadratic has the closed-form
    stationary point implemented below. The weight is clamped to [0, 1].
    """
    if s_cutoff <= 0.0:
        raise ValueError("s_cutoff must be positive")
    d_left = np.roll(candidates.weno_right, 1) - candidates.weno_left
    d_right = np.roll(candidates.weno_left, -1) - candidates.weno_right
    dq_left = averages - np.roll(averages, 1)
    dq_right = averages - np.roll(averages, -1)
    tbv_weno = (d_left**4 + d_right**4) / (dq_left**4 + dq_right**4 + eps3)
    smoothness = (1.0 - tbv_weno) / np.maximum(tbv_weno, eps3)

    e_left = candidates.thinc_left - candidates.weno_left
    e_right = candidates.thinc_right - candidates.weno_right
    denom = e_left**2 + e_right**2
    degenerate = denom < eps3
    raw = np.where(
        degenerate, 0.0, (d_left * e_left + d_right * e_right) / np.where(degenerate, 1.0, denom)
    )
    omega = np.clip(raw, 0.0, 1.0)
    blend = (smoothness < s_cutoff) & candidates.admissible
    omega = np.where(blend, omega, 0.0)
    n_clamped = int(np.count_nonzero(blend & ~degenerate & ((raw < 0.0) | (raw > 1.0))))

    face_left, face_right = assemble_interfaces(omega, candidates)
    return SelectionResult(omega, face_left, face_right, n_clamped=n_clamped)


def bvd4_select(candidates: CandidateSet) -> SelectionResult:
    """Single-candidate total boundary variation over the cell group.

    Each cell's total variation is evaluated twice, once with WENO and once
    with THINC applied to the cell and both neighbors alike (inadmissible
    neighbors contribute their WENO values); THINC wins only strictly.
    """
    tbv_weno = np.abs(
        np.roll(candidates.weno_right, 1) - candidates.weno_left
    ) + np.abs(candidates.weno_right - np.roll(candidates.weno_left, -1))
    tbv_thinc = np.abs(
        np.roll(candidates.thinc_right, 1) - candidates.thinc_left
    ) + np.abs(candidates.thinc_right - np.roll(candidates.thinc_left, -1))
    use_thinc = (tbv_thinc < tbv_weno) & candidates.admissible
    return _discrete_result(use_thinc, candidates)


SELECTORS = {
    "bvd1": bvd1_select,
    "bvd2": bvd2_select,
    "bvd3": bvd3_select,
    "bvd4": bvd4_select,
}
