"""Exact arithmetic for small spin matrices.

Matrix entries live in the ring Q(i, sqrt(2)): every value is
(a + b*sqrt(2)) + i*(c + d*sqrt(2)) with a..d rational.  The ring is closed
under addition and multiplication, which is all the anticommutation
identities, the Kronecker block formulas and the 1/sqrt(2) orthogonal
transforms need.  Anything grid-sized stays floating point; this module is
only for matrices up to 16x16.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

_SQRT2 = 2.0 ** 0.5

RationalLike = Union[int, Fraction]


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class ExactScalar:
    """One element of Q(i, sqrt(2)): (ra + rb*sqrt2) + i*(ia + ib*sqrt2)."""

    ra: Fraction = Fraction(0)
    rb: Fraction = Fraction(0)
    ia: Fraction = Fraction(0)
    ib: Fraction = Fraction(0)

    @staticmethod
    def of(re: RationalLike = 0, im: RationalLike = 0,
           re_sqrt2: RationalLike = 0, im_sqrt2: RationalLike = 0) -> "ExactScalar":
        return ExactScalar(_frac(re), _frac(re_sqrt2), _frac(im), _frac(im_sqrt2))

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        return ExactScalar(self.ra + other.ra, self.rb + other.rb,
                           self.ia + other.ia, self.ib + other.ib)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return ExactScalar(self.ra - other.ra, self.rb - other.rb,
                           self.ia - other.ia, self.ib - other.ib)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.ra, -self.rb, -self.ia, -self.ib)

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        # (x + iy)(u + iv) with x = ra + rb*s, etc., s^2 = 2.
        x1, x2, y1, y2 = self.ra, self.rb, self.ia, self.ib
        u1, u2, v1, v2 = other.ra, other.rb, other.ia, other.ib
        # real part: x*u - y*v
        ra = (x1 * u1 + 2 * x2 * u2) - (y1 * v1 + 2 * y2 * v2)
        rb = (x1 * u2 + x2 * u1) - (y1 * v2 + y2 * v1)
        # imag part: x*v + y*u
        ia = (x1 * v1 + 2 * x2 * v2) + (y1 * u1 + 2 * y2 * u2)
        ib = (x1 * v2 + x2 * v1) + (y1 * u2 + y2 * u1)
        return ExactScalar(ra, rb, ia, ib)

    def conj(self) -> "ExactScalar":
        return ExactScalar(self.ra, self.rb, -self.ia, -self.ib)

    def is_zero(self) -> bool:
        return not (self.ra or self.rb or self.ia or self.ib)

    def to_complex(self) -> complex:
        return complex(float(self.ra) + float(self.rb) * _SQRT2,
                       float(self.ia) + float(self.ib) * _SQRT2)

    def __abs__(self) -> float:
        return abs(self.to_complex())

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"ExactScalar({self.to_complex():.6g})"


ZERO = ExactScalar()
ONE = ExactScalar.of(1)
I_UNIT = ExactScalar.of(0, 1)
HALF = ExactScalar.of(Fraction(1, 2))
# 1/sqrt(2) = (1/2) * sqrt(2)
INV_SQRT2 = ExactScalar.of(0, 0, Fraction(1, 2), 0)

EntryLike = Union[ExactScalar, RationalLike, complex]


def _coerce(x: EntryLike) -> ExactScalar:
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactScalar.of(x)
    if isinstance(x, complex):
        re, im = x.real, x.imag
        if re != int(re) or im != int(im):
            raise TypeError("complex literals must have integer parts; "
                            "use ExactScalar.of with Fractions otherwise")
        return ExactScalar.of(int(re), int(im))
    raise TypeError(f"cannot coerce {type(x).__name__} to ExactScalar")


class ExactMatrix:
    """Dense small matrix over Q(i, sqrt(2)) with exact multiply/add."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[EntryLike]]):
        self.entries: tuple[tuple[ExactScalar, ...], ...] = tuple(
            tuple(_coerce(x) for x in row) for row in entries
        )
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged rows")

    # -- constructors -------------------------------------------------
    @staticmethod
    def zeros(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix([[ONE if i == j else ZERO for j in range(n)]
                            for i in range(n)])

    @staticmethod
    def diag(values: Iterable[EntryLike]) -> "ExactMatrix":
        vals = [_coerce(v) for v in values]
        n = len(vals)
        return ExactMatrix([[vals[i] if i == j else ZERO for j in range(n)]
                            for i in range(n)])

    @staticmethod
    def from_blocks(blocks: Sequence[Sequence["ExactMatrix"]]) -> "ExactMatrix":
        rows: list[list[ExactScalar]] = []
        for block_row in blocks:
            height = block_row[0].rows
            if any(b.rows != height for b in block_row):
                raise ValueError("inconsistent block heights")
            for i in range(height):
                row: list[ExactScalar] = []
                for b in block_row:
                    row.extend(b.entries[i])
                rows.append(row)
        return ExactMatrix(rows)

    # -- algebra -------------------------------------------------------
    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        return ExactMatrix([[a + b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        return ExactMatrix([[a - b for a, b in zip(ra, rb)]
                            for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in row] for row in self.entries])

    def scale(self, c: EntryLike) -> "ExactMatrix":
        cs = _coerce(c)
        return ExactMatrix([[cs * a for a in row] for row in self.entries])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ot = list(zip(*other.entries))  # columns of other
        out = []
        for row in self.entries:
            out_row = []
            for col in ot:
                acc = ZERO
                for a, b in zip(row, col):
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(out)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                row = []
                for j in range(self.cols):
                    for l in range(other.cols):
                        row.append(self.entries[i][j] * other.entries[k][l])
                out.append(row)
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.entries)))

    def conj_transpose(self) -> "ExactMatrix":
        return ExactMatrix([[a.conj() for a in row] for row in zip(*self.entries)])

    # -- queries -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.entries for a in row)

    def is_hermitian(self) -> bool:
        if self.rows != self.cols:
            return False
        return self == self.conj_transpose()

    def max_abs(self) -> float:
        """Largest |entry| as a float (exact zero gives exactly 0.0)."""
        if self.is_zero():
            return 0.0
        return max(abs(a) for row in self.entries for a in row)

    def deviation_from(self, other: "ExactMatrix") -> float:
        """Max absolute entry deviation; exactly 0.0 iff matrices are equal."""
        return (self - other).max_abs()

    def to_numpy(self) -> np.ndarray:
        return np.array([[a.to_complex() for a in row] for row in self.entries],
                        dtype=np.complex128)

    def _check_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"ExactMatrix({self.to_numpy()!r})"
