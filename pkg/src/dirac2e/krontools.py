"""Kronecker products, the vec/Mat correspondence, the 16x16 two-particle
free symbol in both component orders, and the orthogonal transforms that
block-diagonalize the one-sided form.

Component orders for C^16 = C^4 (x) C^4:

* ``plain-kron``: index 4*A + B where A, B are the one-particle component
  indices (large/small major, spin minor).
* ``llss``: large/small pair major, spin pair minor; flat index
  8*a + 4*b + 2*i + j for particle-1 label a, particle-2 label b,
  particle-1 spin i, particle-2 spin j (all 0-based).

The two orders differ by one fixed permutation, computed here by matching
tensor-basis labels and validated by brute force in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import clifford
from .exact import ExactMatrix, INV_SQRT2


def kron(x, y):
    """Kronecker product (x_ij * y blocks); exact when both inputs are exact."""
    if isinstance(x, ExactMatrix) and isinstance(y, ExactMatrix):
        return x.kron(y)
    return np.kron(np.asarray(x), np.asarray(y))


def vec(m: np.ndarray) -> np.ndarray:
    """Column-major flattening of a 2x2 matrix: [[a,b],[c,d]] -> (a,c,b,d)."""
    m = np.asarray(m)
    return m.reshape(2, 2).T.reshape(4)


def mat(v: np.ndarray) -> np.ndarray:
    """Inverse of vec: (v1,v2,v3,v4) -> [[v1,v3],[v2,v4]]."""
    v = np.asarray(v)
    return v.reshape(4).reshape(2, 2).T.copy()


def apply_left(a: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Realize (A (x) I2) on the vec side: returns M @ A^T."""
    return np.asarray(m) @ np.asarray(a).T


def apply_right(b: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Realize (I2 (x) B) on the vec side: returns B @ M."""
    return np.asarray(b) @ np.asarray(m)


def kron_sum_blocks(b: np.ndarray, a1: np.ndarray, a2: np.ndarray) -> np.ndarray:
    """Kronecker sum of two matrices of the shape [[B, A_j], [A_j, -B]].

    Returns the 4x4 block matrix
        [[2B, A2, A1, 0], [A2, 0, 0, A1], [A1, 0, 0, A2], [0, A1, A2, -2B]].
    """
    b = np.atleast_2d(np.asarray(b))
    a1 = np.atleast_2d(np.asarray(a1))
    a2 = np.atleast_2d(np.asarray(a2))
    if not (b.shape == a1.shape == a2.shape) or b.shape[0] != b.shape[1]:
        raise ValueError("blocks must be square and of equal size")
    z = np.zeros_like(b)
    return np.block([
        [2 * b, a2, a1, z],
        [a2, z, z, a1],
        [a1, z, z, a2],
        [z, a1, a2, -2 * b],
    ])


def llss_permutation() -> np.ndarray:
    """Index table p with v_llss[q] = v_kron[p[q]].

    Computed by matching tensor-basis labels: llss position
    (a, b, i, j) holds the plain-kron component (A, B) = (2a+i, 2b+j).
    """
    p = np.empty(16, dtype=int)
    for a in range(2):
        for b in range(2):
            for i in range(2):
                for j in range(2):
                    q = 8 * a + 4 * b + 2 * i + j
                    p[q] = 4 * (2 * a + i) + (2 * b + j)
    return p


def to_llss(matrix_kron: np.ndarray) -> np.ndarray:
    """Conjugate a 16x16 matrix from plain-kron order to llss order."""
    p = llss_permutation()
    return matrix_kron[np.ix_(p, p)]


@dataclass(frozen=True)
class TwoBodySymbol:
    """16x16 Hermitian symbol of the two-particle free operator."""

    xi1: np.ndarray
    xi2: np.ndarray
    mass: float
    matrix16: np.ndarray
    basis_order: str  # "plain-kron" or "llss"


def _sigma_dot(xi: np.ndarray) -> np.ndarray:
    return sum(float(xi[j]) * clifford.pauli(j + 1).to_numpy() for j in range(3))


def two_body_free_symbol(xi1, xi2, m: float, order: str = "llss") -> TwoBodySymbol:
    """Two-particle free symbol at momenta (xi1, xi2).

    Builds both the plain Kronecker sum H0(xi1) (x) I4 + I4 (x) H0(xi2) and
    the block form
        [[2m I4, h2, h1, 0], [h2, 0, 0, h1], [h1, 0, 0, h2], [0, h1, h2, -2m I4]]
    with h1 = (sigma.xi1) (x) I2 and h2 = I2 (x) (sigma.xi2), and verifies
    that the two agree under the fixed llss reordering permutation.
    """
    if order not in ("plain-kron", "llss"):
        raise ValueError(f"unknown basis order {order!r}")
    xi1 = np.asarray(xi1, dtype=float)
    xi2 = np.asarray(xi2, dtype=float)
    h0_1 = clifford.free_symbol(xi1, m).matrix
    h0_2 = clifford.free_symbol(xi2, m).matrix
    plain = kron(h0_1, np.eye(4)) + kron(np.eye(4), h0_2)

    i2 = np.eye(2)
    h1 = kron(_sigma_dot(xi1), i2)
    h2 = kron(i2, _sigma_dot(xi2))
    block = kron_sum_blocks(m * np.eye(4), h1, h2)

    dev = float(np.max(np.abs(to_llss(plain) - block)))
    if dev > 1e-12 * max(1.0, float(np.max(np.abs(block)))):
        raise AssertionError(
            f"internal consistency: kron and block forms disagree by {dev:.3e}")

    matrix = block if order == "llss" else plain
    return TwoBodySymbol(xi1=xi1, xi2=xi2, mass=float(m),
                         matrix16=matrix, basis_order=order)


@dataclass(frozen=True)
class OrthoTransform:
    """Exact orthogonal transform; entries in (1/sqrt2)*{0, +-1}."""

    matrix: ExactMatrix
    label: str

    def to_numpy(self) -> np.ndarray:
        return self.matrix.to_numpy()


def build_S() -> OrthoTransform:
    """8x8 orthogonal S = (1/sqrt2) [[I4, I4], [I4, -I4]]."""
    i4 = ExactMatrix.identity(4)
    s = ExactMatrix.from_blocks([[i4, i4], [i4, -i4]]).scale(INV_SQRT2)
    return OrthoTransform(matrix=s, label="S")


def build_T() -> OrthoTransform:
    """16x16 orthogonal T = S (+) S (block direct sum)."""
    s = build_S().matrix
    z = ExactMatrix.zeros(8, 8)
    return OrthoTransform(matrix=ExactMatrix.from_blocks([[s, z], [z, s]]), label="T")


def conjugate(transform: OrthoTransform, matrix: ExactMatrix | np.ndarray):
    """Orthogonal conjugation T^t M T (equals T^-1 M T).

    Exact inputs stay exact; numpy inputs are conjugated in floating point.
    """
    t = transform.matrix
    tt = t.transpose()
    if (tt @ t).deviation_from(ExactMatrix.identity(t.rows)) != 0.0:
        raise AssertionError("transform is not orthogonal")
    if isinstance(matrix, ExactMatrix):
        return tt @ matrix @ t
    tn = t.to_numpy()
    return tn.T @ np.asarray(matrix) @ tn


# -- exact 16x16 builders for the one-sided form and its canonical shape ----

def _sigma_dot_exact(xi) -> ExactMatrix:
    acc = ExactMatrix.zeros(2, 2)
    for j in range(3):
        acc = acc + clifford.pauli(j + 1).scale(xi[j])
    return acc


def plus_form_symbol_exact(xi1, xi2, m, v) -> ExactMatrix:
    """One-sided (left-multiplying) 16x16 symbol with exact rational entries.

    Blocks: [[v+2m, h12, 0, 0], [h12, v, 0, 0], [0, 0, v, h12],
    [0, 0, h12, v-2m]] with h12 = I2 (x) sigma.(xi1+xi2).
    """
    i2 = ExactMatrix.identity(2)
    h12 = kron(i2, _sigma_dot_exact([xi1[j] + xi2[j] for j in range(3)]))
    i4 = ExactMatrix.identity(4)
    z4 = ExactMatrix.zeros(4, 4)
    d = [i4.scale(v + 2 * m), i4.scale(v), i4.scale(v), i4.scale(v - 2 * m)]
    return ExactMatrix.from_blocks([
        [d[0], h12, z4, z4],
        [h12, d[1], z4, z4],
        [z4, z4, d[2], h12],
        [z4, z4, h12, d[3]],
    ])


def canonical_form_exact(xi1, xi2, m, v) -> ExactMatrix:
    """The exact result of conjugating the one-sided symbol by T:
    alternating +-h12 diagonal blocks, a rank-deficient mass coupling, and
    v times the identity."""
    h12 = kron(ExactMatrix.identity(2),
               _sigma_dot_exact([xi1[j] + xi2[j] for j in range(3)]))
    i4 = ExactMatrix.identity(4)
    z4 = ExactMatrix.zeros(4, 4)
    mi = i4.scale(m)
    kinetic = ExactMatrix.from_blocks([
        [h12, z4, z4, z4],
        [z4, -h12, z4, z4],
        [z4, z4, h12, z4],
        [z4, z4, z4, -h12],
    ])
    mass = ExactMatrix.from_blocks([
        [mi, mi, z4, z4],
        [mi, mi, z4, z4],
        [z4, z4, -mi, mi],
        [z4, z4, mi, -mi],
    ])
    return kinetic + mass + ExactMatrix.identity(16).scale(v)


def lower_coupling_sign_flip() -> ExactMatrix:
    """Diagonal orthogonal W = diag(I8, I4, -I4).

    Conjugation by W flips the sign of the lower-half off-diagonal mass
    coupling, exchanging the two equivalent sign conventions for the
    canonical form.
    """
    i4 = ExactMatrix.identity(4)
    z4 = ExactMatrix.zeros(4, 4)
    return ExactMatrix.from_blocks([
        [i4, z4, z4, z4],
        [z4, i4, z4, z4],
        [z4, z4, i4, z4],
        [z4, z4, z4, -i4],
    ])
