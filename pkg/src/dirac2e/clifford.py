"""Pauli and Dirac matrices, exact anticommutator checks, and the free
one-particle momentum-space symbol with its plane-wave eigenbasis.

Units: hbar = c = 1 throughout; the rest energy enters as a bare mass m.
Component order of a 4-spinor is (psi1_large, psi2_large, psi1_small,
psi2_small), i.e. large/small blocks of 2-spinors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exact import ExactMatrix, ExactScalar

I2 = ExactMatrix.identity(2)
I4 = ExactMatrix.identity(4)

_SIGMA = (
    ExactMatrix([[0, 1], [1, 0]]),
    ExactMatrix([[0, -1j], [1j, 0]]),
    ExactMatrix([[1, 0], [0, -1]]),
)


def pauli(j: int) -> ExactMatrix:
    """Standard Pauli matrix, j in {1, 2, 3}."""
    if j not in (1, 2, 3):
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {j}")
    return _SIGMA[j - 1]


@dataclass(frozen=True)
class DiracRep:
    """Three alpha matrices and beta, all 4x4 Hermitian, exact entries."""

    alpha: tuple[ExactMatrix, ExactMatrix, ExactMatrix]
    beta: ExactMatrix

    def all_matrices(self) -> tuple[ExactMatrix, ...]:
        return (*self.alpha, self.beta)


def standard_dirac_rep() -> DiracRep:
    """Dirac representation: alpha_j = antidiag(sigma_j, sigma_j),
    beta = diag(I2, -I2)."""
    z2 = ExactMatrix.zeros(2, 2)
    alpha = tuple(
        ExactMatrix.from_blocks([[z2, pauli(j)], [pauli(j), z2]]) for j in (1, 2, 3)
    )
    beta = ExactMatrix.from_blocks([[I2, z2], [z2, -I2]])
    return DiracRep(alpha=alpha, beta=beta)  # type: ignore[arg-type]


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    deviation: float


def check_clifford(rep: DiracRep) -> list[IdentityCheck]:
    """Evaluate all 10 distinct anticommutator identities
    m_j m_k + m_k m_j = 2 delta_jk I exactly.

    Failures are reported, never raised.  Deviation is the maximum
    absolute entry of the defect matrix (exactly 0.0 on success).
    """
    mats = rep.all_matrices()
    checks = []
    for j in range(4):
        for k in range(j, 4):
            lhs = mats[j] @ mats[k] + mats[k] @ mats[j]
            rhs = I4.scale(2) if j == k else ExactMatrix.zeros(4, 4)
            dev = lhs.deviation_from(rhs)
            name = f"anticommutator(m{j + 1},m{k + 1})"
            checks.append(IdentityCheck(name, dev == 0.0, dev))
    return checks


@dataclass(frozen=True)
class FreeSymbol:
    """Momentum-space symbol alpha.xi + m*beta at one momentum."""

    xi: np.ndarray
    mass: float
    matrix: np.ndarray  # 4x4 Hermitian

    @property
    def energy(self) -> float:
        return math.sqrt(float(np.dot(self.xi, self.xi)) + self.mass ** 2)


def free_symbol(xi, m: float) -> FreeSymbol:
    """Build sum_j xi_j alpha_j + m beta as a floating 4x4 matrix."""
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (3,):
        raise ValueError("xi must be a 3-vector")
    rep = standard_dirac_rep()
    mat = m * rep.beta.to_numpy()
    for j in range(3):
        mat = mat + xi[j] * rep.alpha[j].to_numpy()
    return FreeSymbol(xi=xi, mass=float(m), matrix=mat)


@dataclass(frozen=True)
class PlaneWaveBasis:
    """Orthonormal eigenbasis of the free symbol at one momentum.

    plus[:, 0], plus[:, 1] span the +E eigenspace; minus the -E one.
    """

    energy: float
    plus: np.ndarray   # (4, 2)
    minus: np.ndarray  # (4, 2)


def _helicity_spinors(xi: np.ndarray) -> np.ndarray:
    """Columns are the +1 and -1 eigenvectors of sigma.(xi/|xi|).

    For xi = 0 the quantization axis falls back to e3, so the spinors are
    the standard basis.  Phases: leading nonzero component real positive.
    """
    norm = float(np.linalg.norm(xi))
    if norm == 0.0:
        return np.eye(2, dtype=complex)
    x, y, z = (xi / norm).tolist()
    theta = math.acos(max(-1.0, min(1.0, z)))
    phi = math.atan2(y, x)
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    chi_plus = np.array([c, s * complex(math.cos(phi), math.sin(phi))])
    chi_minus = np.array([-s * complex(math.cos(phi), -math.sin(phi)), c])
    return np.stack([chi_plus, chi_minus], axis=1)


def _fix_phase(v: np.ndarray) -> np.ndarray:
    idx = int(np.argmax(np.abs(v) > 1e-14))
    z = v[idx]
    if abs(z) == 0.0:
        return v
    return v * (abs(z) / z)


def plane_wave_eigenvectors(xi, m: float) -> PlaneWaveBasis:
    """Deterministic orthonormal eigenpairs of alpha.xi + m beta.

    The spin part diagonalizes sigma.xi (helicity basis); each vector's
    overall phase makes its first nonzero component real positive.
    Raises for the degenerate symbol xi = 0, m = 0.
    """
    xi = np.asarray(xi, dtype=float)
    p = float(np.linalg.norm(xi))
    if p == 0.0 and m == 0.0:
        raise ValueError("degenerate symbol: xi = 0 and m = 0 has no spectral gap")
    energy = math.sqrt(p * p + m * m)
    chi = _helicity_spinors(xi)
    plus_cols = []
    minus_cols = []
    scale = math.sqrt((energy + m) / (2 * energy))
    for h, sign in ((0, 1.0), (1, -1.0)):
        spinor = chi[:, h]
        small = sign * p / (energy + m)
        u = scale * np.concatenate([spinor, small * spinor])
        v = scale * np.concatenate([-small * spinor, spinor])
        plus_cols.append(_fix_phase(u))
        minus_cols.append(_fix_phase(v))
    return PlaneWaveBasis(energy=energy,
                          plus=np.stack(plus_cols, axis=1),
                          minus=np.stack(minus_cols, axis=1))
