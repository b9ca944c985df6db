"""Concrete inner product spaces: R^n and C^n vectors plus orthonormal families.

Conventions
-----------
The inner product is linear in the first slot and conjugate-linear in the
second:

    <x, y> = sum_i x_i * conj(y_i)

so over C, <i*e1, e1> = i.  Norms are ||x|| = sqrt(Re<x, x>).  Every vector
carries a field tag; mixing real and complex operands raises instead of
silently promoting, because certification must know which field's theorem it
is checking.  Infinite-dimensional statements are represented by finite
truncations: a coefficient sequence's length defines the family size, and the
caller's tail is declared zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Union

import numpy as np

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    NotOrthonormalError,
    RankDeficiencyError,
)

#: Default absolute tolerance for orthonormality checks and rank decisions.
DEFAULT_ORTHO_TOL = 1e-10

Scalar = Union[int, float, complex]


class FieldTag(enum.Enum):
    """Scalar field of a space instance."""

    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.float64) if self is FieldTag.REAL else np.dtype(np.complex128)

    @classmethod
    def parse(cls, name: str) -> "FieldTag":
        try:
            return cls(str(name).lower())
        except ValueError:
            raise FieldMismatchError(f"unknown field {name!r} (expected 'real' or 'complex')")


def _as_coords(values, tag: FieldTag) -> np.ndarray:
    raw = np.asarray(values)
    if tag is FieldTag.REAL and np.iscomplexobj(raw):
        raise FieldMismatchError("complex entries are not representable over real")
    try:
        arr = np.array(raw, dtype=tag.dtype, copy=True)
    except (TypeError, ValueError) as exc:
        raise FieldMismatchError(f"entries not representable over {tag.value}: {exc}")
    if arr.ndim != 1:
        raise DimensionMismatchError(f"expected a 1-D array, got shape {arr.shape}")
    if arr.size == 0:
        raise DimensionMismatchError("dimension must be >= 1")
    if not np.all(np.isfinite(arr)):
        raise ValueError("entries must be finite (no NaN/Inf)")
    arr.flags.writeable = False
    return arr


def _check_scalar(c: Scalar, tag: FieldTag) -> Scalar:
    if isinstance(c, (bool,)) or not isinstance(c, (int, float, complex, np.number)):
        raise TypeError(f"expected a scalar, got {type(c).__name__}")
    c = complex(c)
    if tag is FieldTag.REAL:
        if c.imag != 0.0:
            raise FieldMismatchError("complex scalar applied to a real-space vector")
        return c.real
    return c


@dataclass(frozen=True, eq=False)
class Vector:
    """Immutable element of R^n or C^n."""

    coords: np.ndarray
    field: FieldTag

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _as_coords(self.coords, self.field))

    @property
    def dim(self) -> int:
        return int(self.coords.size)

    def __add__(self, other: "Vector") -> "Vector":
        check_same_space(self, other)
        return Vector(self.coords + other.coords, self.field)

    def __sub__(self, other: "Vector") -> "Vector":
        check_same_space(self, other)
        return Vector(self.coords - other.coords, self.field)

    def __neg__(self) -> "Vector":
        return Vector(-self.coords, self.field)

    def scaled(self, c: Scalar) -> "Vector":
        """c * x, rejecting complex c on a real-space vector."""
        return Vector(_check_scalar(c, self.field) * self.coords, self.field)

    def __repr__(self) -> str:  # keep reprs short in test output
        return f"Vector({self.coords.tolist()!r}, {self.field.value})"


def vector(values, field: FieldTag | str | None = None) -> Vector:
    """Build a Vector, inferring the field from the values when not given."""
    if field is None:
        tag = FieldTag.COMPLEX if np.iscomplexobj(np.asarray(values)) else FieldTag.REAL
    elif isinstance(field, FieldTag):
        tag = field
    else:
        tag = FieldTag.parse(field)
    return Vector(np.asarray(values), tag)


def check_same_space(x: Vector, y: Vector) -> None:
    if x.field is not y.field:
        raise FieldMismatchError(f"field mismatch: {x.field.value} vs {y.field.value}")
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dimension mismatch: {x.dim} vs {y.dim}")


def inner(x: Vector, y: Vector) -> Scalar:
    """<x, y> = sum_i x_i conj(y_i); a float over R, a complex over C."""
    check_same_space(x, y)
    v = np.vdot(y.coords, x.coords)  # vdot conjugates its first argument
    return float(v.real) if x.field is FieldTag.REAL else complex(v)


def norm(x: Vector) -> float:
    """||x|| = sqrt(Re<x, x>); zero iff x = 0."""
    return float(np.linalg.norm(x.coords))


@dataclass(frozen=True, eq=False)
class CoefficientSequence:
    """Finite truncation of an l^2 scalar sequence, with cached square norm."""

    entries: np.ndarray
    field: FieldTag
    sq_norm: float = dc_field(init=False)

    def __post_init__(self) -> None:
        arr = _as_coords(self.entries, self.field)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "sq_norm", float(np.vdot(arr, arr).real))

    def __len__(self) -> int:
        return int(self.entries.size)

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.sq_norm))


def coefficients(values, field: FieldTag | str | None = None) -> CoefficientSequence:
    """Build a CoefficientSequence analogously to vector()."""
    if field is None:
        tag = FieldTag.COMPLEX if np.iscomplexobj(np.asarray(values)) else FieldTag.REAL
    elif isinstance(field, FieldTag):
        tag = field
    else:
        tag = FieldTag.parse(field)
    return CoefficientSequence(np.asarray(values), tag)


@dataclass(frozen=True, eq=False)
class OrthonormalFamily:
    """k <= n vectors with pairwise inner products 0 and norms 1, within tol.

    Parameters
    ----------
    members : tuple of Vector
        The family, all in one space.
    tol : float
        Absolute tolerance used for the orthonormality check at construction.
    """

    members: tuple[Vector, ...]
    tol: float = DEFAULT_ORTHO_TOL
    _matrix: np.ndarray = dc_field(init=False, repr=False)

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if not members:
            raise DimensionMismatchError("family must contain at least one vector")
        first = members[0]
        for m in members[1:]:
            check_same_space(first, m)
        if len(members) > first.dim:
            raise DimensionMismatchError(
                f"{len(members)} members cannot be orthonormal in dimension {first.dim}"
            )
        mat = np.stack([m.coords for m in members])
        gram = mat @ mat.conj().T
        norms = np.sqrt(np.abs(np.diag(gram).real))
        if np.max(np.abs(norms - 1.0)) > self.tol:
            raise NotOrthonormalError(f"member norm off unit by more than tol={self.tol}")
        off = gram - np.diag(np.diag(gram))
        if off.size and np.max(np.abs(off)) > self.tol:
            raise NotOrthonormalError(f"pairwise inner product above tol={self.tol}")
        mat = mat.copy()
        mat.flags.writeable = False
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_matrix", mat)

    @property
    def field(self) -> FieldTag:
        return self.members[0].field

    @property
    def dim(self) -> int:
        return self.members[0].dim

    @property
    def size(self) -> int:
        return len(self.members)


def standard_basis(field: FieldTag, dim: int, size: int | None = None) -> OrthonormalFamily:
    """First `size` standard basis vectors of the given space."""
    size = dim if size is None else size
    if not 1 <= size <= dim:
        raise DimensionMismatchError(f"cannot take {size} basis vectors in dimension {dim}")
    eye = np.eye(dim, dtype=field.dtype)
    return OrthonormalFamily(tuple(Vector(eye[i], field) for i in range(size)))


def gram_schmidt(vs: Iterable[Vector], tol: float = DEFAULT_ORTHO_TOL) -> OrthonormalFamily:
    """Orthonormalize vs by classical Gram-Schmidt with one re-orthogonalization pass.

    Parameters
    ----------
    vs : iterable of Vector
        Linearly independent input vectors (up to tol), all in one space.
    tol : float
        Residual norms below tol raise RankDeficiencyError; also used as the
        orthonormality tolerance of the returned family.

    Returns
    -------
    OrthonormalFamily
        Family spanning the same subspace, in order.
    """
    vs = list(vs)
    if not vs:
        raise DimensionMismatchError("need at least one vector")
    first = vs[0]
    for v in vs[1:]:
        check_same_space(first, v)
    basis: list[np.ndarray] = []
    for v in vs:
        u = v.coords.astype(first.field.dtype, copy=True)
        # Classical projection plus one extra pass recovers orthogonality lost
        # to cancellation on ill-conditioned inputs.
        for _ in range(2):
            for e in basis:
                u -= np.vdot(e, u) * e
        residual = float(np.linalg.norm(u))
        if residual < tol:
            raise RankDeficiencyError(
                f"vector {len(basis)} is dependent on its predecessors (residual {residual:.3e})"
            )
        basis.append(u / residual)
    return OrthonormalFamily(tuple(Vector(b, first.field) for b in basis), tol)


def fourier_coefficients(x: Vector, fam: OrthonormalFamily) -> CoefficientSequence:
    """The sequence (<x, e_i>)_i."""
    check_same_space(x, fam.members[0])
    coeffs = fam._matrix.conj() @ x.coords
    return CoefficientSequence(coeffs, x.field)


def synthesize(coeffs: CoefficientSequence, fam: OrthonormalFamily) -> Vector:
    """sum_i c_i e_i; its norm equals sqrt(sum |c_i|^2) up to rounding."""
    if len(coeffs) != fam.size:
        raise DimensionMismatchError(f"{len(coeffs)} coefficients for {fam.size} members")
    if coeffs.field is not fam.field:
        raise FieldMismatchError("coefficient field differs from family field")
    return Vector(coeffs.entries @ fam._matrix, fam.field)


def project(x: Vector, fam: OrthonormalFamily) -> Vector:
    """Orthogonal projection of x onto span(fam)."""
    return synthesize(fourier_coefficients(x, fam), fam)
