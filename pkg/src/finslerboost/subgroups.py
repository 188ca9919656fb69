"""Closed-form transformations of the two noncompact subgroups.

The Abelian 2-parameter subgroup has its boost direction orthogonal to
the preferred axis (the dilatation switches off there); the 1-parameter
subgroup boosts along the axis and carries the full scale factor.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    AnisotropySpec,
    FourVector,
    NonOrthogonal,
    NonTimelike,
    OffHorosphere,
    Tolerance,
    UnitVector3,
    Velocity3,
    ZeroVelocity,
    cross3,
    dot3,
    norm3,
)

__all__ = [
    "ORTHO_TOL",
    "HOROSPHERE_TOL",
    "AbelianParams",
    "AxialParams",
    "AxialInvariants",
    "abelian_transform",
    "abelian_velocity",
    "abelian_params_from_velocity",
    "abelian_transform_v",
    "axial_transform",
    "axial_invariants",
    "perpendicular_to",
]

ORTHO_TOL = 1e-12
# The horosphere condition is quadratically degenerate near v = 0, so its
# membership gate is looser than the working absolute tolerance.
HOROSPHERE_TOL = 1e-8


def perpendicular_to(nu: UnitVector3) -> UnitVector3:
    """Deterministic unit vector orthogonal to nu."""
    nuv = nu.as_array()
    pivot = np.zeros(3)
    pivot[int(np.argmin(np.abs(nuv)))] = 1.0
    return UnitVector3.normalized(np.cross(nuv, pivot))


@dataclass(frozen=True)
class AbelianParams:
    """Direction n orthogonal to the preferred axis, and rapidity alpha.

    Equivalent to the free 2-vector n * alpha in the plane orthogonal to
    nu; use from_tangent to construct from that 2-vector.  Orthogonality
    against a concrete nu is validated by the operations.
    """

    n: UnitVector3
    alpha: float

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise ValueError("alpha must be finite")

    @classmethod
    def from_tangent(cls, nu: UnitVector3, w) -> "AbelianParams":
        """Build from the plane vector w = n * alpha (w is projected onto
        the plane orthogonal to nu)."""
        w = np.asarray(w, dtype=float)
        w = w - dot3(nu, w) * nu.as_array()
        alpha = float(np.linalg.norm(w))
        if alpha == 0.0:
            return cls(perpendicular_to(nu), 0.0)
        return cls(UnitVector3.normalized(w / alpha), alpha)

    def to_json(self) -> dict:
        return {"n": self.n.to_json(), "alpha": self.alpha}


@dataclass(frozen=True)
class AxialParams:
    """Rapidity of a boost along the preferred axis."""

    alpha: float

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise ValueError("alpha must be finite")


def _check_orthogonal(nu: UnitVector3, n: UnitVector3) -> None:
    if abs(dot3(nu, n)) > ORTHO_TOL:
        raise NonOrthogonal(f"boost direction not orthogonal to axis: nu.n = {dot3(nu, n)}")


def abelian_transform(nu: UnitVector3, p: AbelianParams, x: FourVector) -> FourVector:
    """Finite Abelian boost applied to event coordinates."""
    _check_orthogonal(nu, p.n)
    nuv = nu.as_array()
    nv = p.n.as_array()
    a = p.alpha
    sx = x.spatial()
    nx = float(np.dot(nv, sx))
    nux = float(np.dot(nuv, sx))
    half = a * a / 2.0
    t = (half + 1.0) * x.t - a * nx - half * nux
    s = sx + nv * (-x.t + nux) * a + nuv * ((x.t - nux) * half - nx * a)
    return FourVector(t, float(s[0]), float(s[1]), float(s[2]))


def abelian_velocity(nu: UnitVector3, p: AbelianParams) -> Velocity3:
    """Primed-frame velocity; always on the unit-level horosphere."""
    _check_orthogonal(nu, p.n)
    half = p.alpha * p.alpha / 2.0
    v = (p.n.as_array() * p.alpha + nu.as_array() * half) / (1.0 + half)
    return Velocity3.from_array(v)


def abelian_params_from_velocity(
    nu: UnitVector3, v: Velocity3, tol: Tolerance = DEFAULT_TOL
) -> AbelianParams:
    """Invert the velocity map on the horosphere.

    Unique for alpha > 0 with v.nu > 0; v.nu = 0 forces alpha = 0.
    """
    vv = v.as_array()
    if float(np.linalg.norm(vv)) < tol.abs_tol:
        raise ZeroVelocity("direction is undefined at v = 0")
    vsq = float(np.dot(vv, vv))
    level = (1.0 - dot3(v, nu)) / math.sqrt(1.0 - vsq)
    if abs(level - 1.0) > HOROSPHERE_TOL:
        raise OffHorosphere(f"velocity is off the horosphere: level = {level}")
    vnu = dot3(v, nu)
    alpha = math.sqrt(2.0 * vnu / (1.0 - vnu)) if vnu > 0 else 0.0
    if alpha == 0.0:
        n = UnitVector3.normalized(vv - vnu * nu.as_array())
        return AbelianParams(n, 0.0)
    half = alpha * alpha / 2.0
    n_vec = (vv * (1.0 + half) - nu.as_array() * half) / alpha
    return AbelianParams(UnitVector3.normalized(n_vec), alpha)


def abelian_transform_v(
    nu: UnitVector3, v: Velocity3, x: FourVector, tol: Tolerance = DEFAULT_TOL
) -> FourVector:
    """Abelian boost reparametrized by the frame velocity v.

    Preserves both (x0^2 - x^2) and (x0 - nu.x), hence the anisotropic
    interval for every r.
    """
    vv = v.as_array()
    vsq = float(np.dot(vv, vv))
    if vsq > 0:
        level = (1.0 - dot3(v, nu)) / math.sqrt(1.0 - vsq)
        if abs(level - 1.0) > HOROSPHERE_TOL:
            raise OffHorosphere(f"velocity is off the horosphere: level = {level}")
    nuv = nu.as_array()
    sx = x.spatial()
    vx = float(np.dot(vv, sx))
    nux = float(np.dot(nuv, sx))
    vnu = float(np.dot(vv, nuv))
    w = 1.0 - vnu
    t = (x.t - vx) / w
    s = sx - ((x.t - nux) * vv - ((2.0 * x.t - nux) * vnu - vx) * nuv) / w
    return FourVector(t, float(s[0]), float(s[1]), float(s[2]))


def axial_transform(spec: AnisotropySpec, p: AxialParams, x: FourVector) -> FourVector:
    """Boost along the preferred axis with its scale prefactor e^{-r alpha}.

    The flow is additive in alpha; the inverse is the transform at -alpha.
    """
    nuv = spec.nu.as_array()
    sx = x.spatial()
    nux = float(np.dot(nuv, sx))
    d = math.exp(-spec.r * p.alpha)
    ch, sh = math.cosh(p.alpha), math.sinh(p.alpha)
    t = d * (x.t * ch - nux * sh)
    s = d * (sx - nuv * nux + nuv * (-x.t * sh + nux * ch))
    return FourVector(t, float(s[0]), float(s[1]), float(s[2]))


@dataclass(frozen=True)
class AxialInvariants:
    """Quantities with definite scaling under the axial subgroup.

    nu_projection scales by e^{(1-r) alpha}, interval_sq by e^{-2 r alpha},
    and cylinder_ratio is exactly invariant.
    """

    nu_projection: float  # x0 - nu.x
    interval_sq: float  # x0^2 - x^2
    cylinder_ratio: float  # |x cross nu| / sqrt(x0^2 - x^2)

    def to_json(self) -> dict:
        return {
            "nu_projection": self.nu_projection,
            "interval_sq": self.interval_sq,
            "cylinder_ratio": self.cylinder_ratio,
        }


def axial_invariants(spec: AnisotropySpec, x: FourVector) -> AxialInvariants:
    """Scaling quantities of the axial subgroup at an event.

    Raises NonTimelike when x0^2 <= |x|^2, where the ratio is undefined.
    """
    sx = x.spatial()
    proj = x.t - dot3(spec.nu, sx)
    interval = x.t * x.t - float(np.dot(sx, sx))
    if interval <= 0.0:
        raise NonTimelike("cylinder ratio requires a timelike event")
    ratio = norm3(cross3(sx, spec.nu)) / math.sqrt(interval)
    return AxialInvariants(proj, interval, ratio)
