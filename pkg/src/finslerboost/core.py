"""Value types, the anisotropic interval, and small vector helpers.

Conventions: metric signature (+, -, -, -), x0 is time, c = 1.  Spatial
index lowering negates components.  4x4 matrices are plain numpy arrays
with the row index contravariant and the column index covariant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DomainError",
    "SpacelikeInput",
    "DegenerateRatio",
    "NonOrthogonal",
    "OffHorosphere",
    "ZeroVelocity",
    "NonTimelike",
    "NullDensity",
    "OutOfRange",
    "Tolerance",
    "DEFAULT_TOL",
    "FourVector",
    "UnitVector3",
    "Velocity3",
    "AnisotropySpec",
    "dot3",
    "cross3",
    "norm3",
    "minkowski_interval",
    "finsler_interval_sq",
    "matrix_to_json",
    "matrix_from_json",
    "bispinor_to_json",
    "bispinor_from_json",
]

UNIT_NORM_TOL = 1e-12


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class SpacelikeInput(DomainError):
    """Spacelike displacement where the anisotropic interval is undefined."""


class DegenerateRatio(DomainError):
    """Vanishing interval base with a nonvanishing numerator."""


class NonOrthogonal(DomainError):
    """Boost direction not orthogonal to the preferred axis."""


class OffHorosphere(DomainError):
    """Velocity does not satisfy the horosphere condition."""


class ZeroVelocity(DomainError):
    """Vanishing velocity where a direction cannot be recovered."""


class NonTimelike(DomainError):
    """Event with x0^2 <= |x|^2 where a timelike ratio is required."""


class NullDensity(DomainError):
    """Vanishing bispinor density where the invariant form is singular."""


class OutOfRange(DomainError):
    """Requested level outside the range of the surface family."""


@dataclass(frozen=True)
class Tolerance:
    """Numerical tolerances shared across the library.

    limit_switch is the threshold on the small group parameter (the
    product of the axis projection and the rapidity) below which series
    branches replace the closed-form coefficient functions.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    limit_switch: float = 1e-4

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0 and self.limit_switch > 0):
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = Tolerance()


def _require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError("components must be finite")


@dataclass(frozen=True)
class FourVector:
    """Contravariant event or displacement coordinates (x0, x1, x2, x3)."""

    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        _require_finite(self.t, self.x, self.y, self.z)

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z], dtype=float)

    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    @classmethod
    def from_array(cls, a) -> "FourVector":
        a = np.asarray(a, dtype=float)
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def to_json(self) -> list:
        return [self.t, self.x, self.y, self.z]

    @classmethod
    def from_json(cls, obj) -> "FourVector":
        return cls(*map(float, obj))


@dataclass(frozen=True)
class UnitVector3:
    """Unit 3-vector; validated to unit norm on construction."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        _require_finite(self.x, self.y, self.z)
        nsq = self.x * self.x + self.y * self.y + self.z * self.z
        if abs(nsq - 1.0) > UNIT_NORM_TOL:
            raise ValueError(f"not a unit vector: |v|^2 = {nsq}")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def __neg__(self) -> "UnitVector3":
        return UnitVector3(-self.x, -self.y, -self.z)

    @classmethod
    def normalized(cls, v) -> "UnitVector3":
        v = np.asarray(v, dtype=float)
        n = float(np.linalg.norm(v))
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        v = v / n
        return cls(float(v[0]), float(v[1]), float(v[2]))

    def to_json(self) -> list:
        return [self.x, self.y, self.z]

    @classmethod
    def from_json(cls, obj) -> "UnitVector3":
        return cls(*map(float, obj))


@dataclass(frozen=True)
class Velocity3:
    """3-velocity of the primed frame; |v| < 1."""

    vx: float
    vy: float
    vz: float

    def __post_init__(self):
        _require_finite(self.vx, self.vy, self.vz)
        if self.vx * self.vx + self.vy * self.vy + self.vz * self.vz >= 1.0:
            raise ValueError("speed must be below 1 (c = 1 units)")

    def as_array(self) -> np.ndarray:
        return np.array([self.vx, self.vy, self.vz], dtype=float)

    def speed(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    @classmethod
    def from_array(cls, a) -> "Velocity3":
        a = np.asarray(a, dtype=float)
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def to_json(self) -> list:
        return [self.vx, self.vy, self.vz]

    @classmethod
    def from_json(cls, obj) -> "Velocity3":
        return cls(*map(float, obj))


@dataclass(frozen=True)
class AnisotropySpec:
    """Preferred direction nu and dimensionless anisotropy parameter r.

    Any finite r is accepted; restricting to a physical range is left to
    callers.
    """

    nu: UnitVector3
    r: float

    def __post_init__(self):
        _require_finite(self.r)

    def to_json(self) -> dict:
        return {"nu": self.nu.to_json(), "r": self.r}

    @classmethod
    def from_json(cls, obj) -> "AnisotropySpec":
        return cls(UnitVector3.from_json(obj["nu"]), float(obj["r"]))


def _vec3(a) -> np.ndarray:
    if isinstance(a, (UnitVector3, Velocity3)):
        return a.as_array()
    return np.asarray(a, dtype=float)


def dot3(a, b) -> float:
    return float(np.dot(_vec3(a), _vec3(b)))


def cross3(a, b) -> np.ndarray:
    return np.cross(_vec3(a), _vec3(b))


def norm3(a) -> float:
    return float(np.linalg.norm(_vec3(a)))


def minkowski_interval(dx: FourVector) -> float:
    """dt^2 - |dx|^2; negative for spacelike displacements."""
    return dx.t * dx.t - (dx.x * dx.x + dx.y * dx.y + dx.z * dx.z)


def finsler_interval_sq(
    dx: FourVector, spec: AnisotropySpec, tol: Tolerance = DEFAULT_TOL
) -> float:
    """Anisotropic interval ds^2 = [(dx0 - nu.dx)^2 / (dx0^2 - dx^2)]^r (dx0^2 - dx^2).

    Defined on the timelike region and its lightlike boundary.  On the
    boundary: 0 when dx0 = nu.dx as well (the ray along nu), otherwise 0
    for r >= 0 and DegenerateRatio for r < 0 (the ratio diverges).
    """
    base = minkowski_interval(dx)
    sx = dx.spatial()
    num = dx.t - dot3(spec.nu, sx)
    scale = dx.t * dx.t + float(np.dot(sx, sx))
    thr = tol.abs_tol * max(1.0, scale)
    if base < -thr:
        if spec.r != round(spec.r):
            raise SpacelikeInput(
                "spacelike displacement: fractional power of a negative base"
            )
        return (num * num / base) ** round(spec.r) * base
    if abs(base) <= thr:
        if abs(num) <= math.sqrt(thr):
            return 0.0
        if spec.r < 0:
            raise DegenerateRatio(
                "lightlike displacement off the preferred ray diverges for r < 0"
            )
        return 0.0
    return (num * num / base) ** spec.r * base


def matrix_to_json(m: np.ndarray) -> list:
    """Row-major list of 16 numbers."""
    return [float(v) for v in np.asarray(m, dtype=float).reshape(16)]


def matrix_from_json(obj) -> np.ndarray:
    a = np.asarray([float(v) for v in obj], dtype=float)
    if a.size != 16:
        raise ValueError("expected 16 entries")
    return a.reshape(4, 4)


def bispinor_to_json(psi: np.ndarray) -> list:
    """Four [re, im] pairs."""
    psi = np.asarray(psi, dtype=complex).reshape(4)
    return [[float(c.real), float(c.imag)] for c in psi]


def bispinor_from_json(obj) -> np.ndarray:
    if len(obj) != 4:
        raise ValueError("expected 4 [re, im] pairs")
    return np.array([complex(p[0], p[1]) for p in obj], dtype=complex)
