"""Finite-dimensional representations of the noncommutative position algebra.

The three position components are lam * J_i, where J_i are the standard
spin-j angular-momentum matrices built from ladder operators in the J3
eigenbasis. This gives an exactly known spectrum and machine-precision
commutation relations [x_i, x_j] = i lam eps_ijk x_k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import PlanckScale
from .errors import (
    CapacityError,
    DegeneracyError,
    InvalidSeparationError,
    InvalidSpinError,
    ShapeError,
)

# Dense eigen-decomposition cost grows cubically; closed-form paths
# (radial_length, state counting, the variance formulas) have no cap.
DIMENSION_CAP = 4001

_EIGENVALUE_RTOL = 1e-10
_DEGENERACY_GAP = 1e-10


@dataclass(frozen=True)
class AlgebraRep:
    """Dense Hermitian matrices x1, x2, x3 (units m) for a single spin j."""

    spin: float
    dim: int
    x1: np.ndarray
    x2: np.ndarray
    x3: np.ndarray
    lam: float

    @property
    def components(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class StateVector:
    """Normalized amplitudes in a representation's J3 eigenbasis."""

    amplitudes: np.ndarray
    rep_spin: float


def _check_spin(spin: float) -> float:
    twice = 2.0 * spin
    if spin < 0 or not math.isfinite(twice) or round(twice) != twice:
        raise InvalidSpinError(
            f"spin must be a non-negative multiple of 1/2, got {spin!r}")
    return float(spin)


def build_representation(spin: float, scale: PlanckScale) -> AlgebraRep:
    """Build x_i = lam * J_i via the ladder-operator construction.

    Basis ordering is descending J3 eigenvalue: m = j, j-1, ..., -j.
    """
    j = _check_spin(spin)
    dim = int(round(2 * j)) + 1
    if dim > DIMENSION_CAP:
        raise CapacityError(
            f"dimension {dim} exceeds cap {DIMENSION_CAP} (spin {spin})")
    m = j - np.arange(dim)
    # J+ couples |j, m> -> |j, m+1> with matrix element sqrt(j(j+1) - m(m+1))
    ladder = np.sqrt(j * (j + 1.0) - m[1:] * (m[1:] + 1.0))
    jp = np.diag(ladder, 1).astype(complex)
    jm = jp.conj().T
    lam = scale.lam
    x1 = lam * 0.5 * (jp + jm)
    x2 = lam * (-0.5j) * (jp - jm)
    x3 = lam * np.diag(m).astype(complex)
    return AlgebraRep(spin=j, dim=dim, x1=x1, x2=x2, x3=x3, lam=lam)


def commutator_residual(rep: AlgebraRep) -> float:
    """Worst relative violation of [x_i, x_j] = i lam eps_ijk x_k.

    Returns max over cyclic pairs of ||[x_i, x_j] - i lam x_k|| / (lam ||x_k||)
    in the Frobenius norm. Zero for the trivial spin-0 representation.
    """
    if rep.dim == 1:
        return 0.0
    xs = rep.components
    worst = 0.0
    for i, jdx, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        comm = xs[i] @ xs[jdx] - xs[jdx] @ xs[i]
        target = 1j * rep.lam * xs[k]
        denom = rep.lam * np.linalg.norm(xs[k])
        worst = max(worst, np.linalg.norm(comm - target) / denom)
    return worst


def radial_length(spin: float, scale: PlanckScale) -> float:
    """Closed-form radial observable lam * sqrt(j(j+1)); no matrices, no cap."""
    j = _check_spin(spin)
    return scale.lam * math.sqrt(j * (j + 1.0))


def radial_observable(rep: AlgebraRep) -> float:
    """Radial observable <L> = lam * sqrt(j(j+1)) of the representation.

    Also verifies that the matrix square root of the Casimir commutes with
    every component to ||[L, x_i]|| < 1e-12 lam^2 (automatic here: in an
    irreducible representation the Casimir is a multiple of the identity).
    """
    casimir = rep.x1 @ rep.x1 + rep.x2 @ rep.x2 + rep.x3 @ rep.x3
    eigvals, eigvecs = np.linalg.eigh(casimir)
    root = (eigvecs * np.sqrt(np.clip(eigvals, 0.0, None))) @ eigvecs.conj().T
    for x in rep.components:
        if np.linalg.norm(root @ x - x @ root) >= 1e-12 * rep.lam ** 2 * max(rep.spin, 1.0):
            raise AssertionError("radial observable does not commute with x_i")
    return rep.lam * math.sqrt(rep.spin * (rep.spin + 1.0))


def _check_axis(axis) -> np.ndarray:
    a = np.asarray(axis, dtype=float)
    if a.shape != (3,) or abs(np.linalg.norm(a) - 1.0) > 1e-10:
        raise ShapeError(f"axis must be a unit 3-vector, got {axis!r}")
    return a


def _projected(rep: AlgebraRep, axis: np.ndarray) -> np.ndarray:
    return axis[0] * rep.x1 + axis[1] * rep.x2 + axis[2] * rep.x3


def highest_weight_state(rep: AlgebraRep, axis=(0.0, 0.0, 1.0)) -> StateVector:
    """Eigenvector of (axis . x) with maximal eigenvalue, which is +j lam.

    Raises DegeneracyError if the top spectral gap is below 1e-10 lam
    (cannot happen for j > 0 with exact arithmetic).
    """
    a = _check_axis(axis)
    eigvals, eigvecs = np.linalg.eigh(_projected(rep, a))
    if rep.dim > 1 and eigvals[-1] - eigvals[-2] < _DEGENERACY_GAP * rep.lam:
        raise DegeneracyError(
            f"top eigenvalue gap {eigvals[-1] - eigvals[-2]:.3e} below threshold")
    vec = eigvecs[:, -1]
    vec = vec / np.linalg.norm(vec)
    return StateVector(amplitudes=vec, rep_spin=rep.spin)


def transverse_variance_operator(rep: AlgebraRep, state: StateVector,
                                 axis=(0.0, 0.0, 1.0)) -> float:
    """Expectation <psi| x_perp^2 |psi> about the given axis, in m^2.

    x_perp^2 is the Casimir minus the squared axis projection; for the
    highest-weight state this equals lam^2 j exactly.
    """
    a = _check_axis(axis)
    psi = np.asarray(state.amplitudes, dtype=complex)
    if psi.shape != (rep.dim,):
        raise ShapeError(
            f"state dimension {psi.shape} does not match rep dim {rep.dim}")
    casimir = rep.x1 @ rep.x1 + rep.x2 @ rep.x2 + rep.x3 @ rep.x3
    proj = _projected(rep, a)
    perp_sq = casimir - proj @ proj
    return float(np.real(psi.conj() @ (perp_sq @ psi)))


def angular_variance_formula(L: float, scale: PlanckScale) -> float:
    """Directional variance lam / L (dimensionless) for separation L."""
    if not (L > 0.0) or not math.isfinite(L):
        raise InvalidSeparationError(f"separation must be positive, got {L!r}")
    return scale.lam / L


def transverse_variance_formula(L: float, scale: PlanckScale) -> float:
    """Transverse position variance lam * L (m^2) for separation L."""
    if not (L > 0.0) or not math.isfinite(L):
        raise InvalidSeparationError(f"separation must be positive, got {L!r}")
    return scale.lam * L


def state_count_continuum(R: float, scale: PlanckScale) -> float:
    """Continuum degree-of-freedom count 4 pi (R / planck_length)^2."""
    if not (R > 0.0) or not math.isfinite(R):
        raise InvalidSeparationError(f"radius must be positive, got {R!r}")
    return 4.0 * math.pi * (R / scale.planck_length) ** 2


def state_count_discrete(max_spin: int) -> int:
    """Total eigenstate count over integer spins 0..j: sum(2j'+1) = (j+1)^2.

    Integer spins only; including half-integer spins would double the
    asymptotic count and break agreement with the continuum formula.
    """
    if not isinstance(max_spin, (int, np.integer)) or max_spin < 0:
        raise InvalidSpinError(
            f"max_spin must be a non-negative integer, got {max_spin!r}")
    return (int(max_spin) + 1) ** 2
