"""The 4-parameter boost subgroup and the dilatation-carrying generalized boosts.

All transformations are passive: a matrix maps event coordinates of the
initial frame to those of the primed frame.  The velocity returned by
velocity_from_params is the primed frame's velocity seen from the initial
frame.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    AnisotropySpec,
    FourVector,
    Tolerance,
    UnitVector3,
    Velocity3,
    cross3,
    dot3,
)

__all__ = [
    "BoostParams",
    "generator",
    "generalized_generator",
    "boost_matrix",
    "boost_matrix_inverse",
    "compose",
    "velocity_from_params",
    "params_from_velocity",
    "add_velocities",
    "add_velocities_raw",
    "dilation_factor",
    "generalized_boost_matrix",
    "axial_rotation",
    "translate",
    "apply_matrix",
]


@dataclass(frozen=True)
class BoostParams:
    """Boost direction n and rapidity alpha, canonicalized to alpha >= 0.

    The sign ambiguity (n, alpha) <-> (-n, -alpha) leaves the transformation
    unchanged, so negative rapidities are absorbed into the direction.
    """

    n: UnitVector3
    alpha: float

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise ValueError("alpha must be finite")
        if self.alpha < 0:
            object.__setattr__(self, "alpha", -self.alpha)
            object.__setattr__(self, "n", -self.n)

    @classmethod
    def identity(cls, nu: UnitVector3) -> "BoostParams":
        return cls(n=nu, alpha=0.0)

    def to_json(self) -> dict:
        return {"n": self.n.to_json(), "alpha": self.alpha}

    @classmethod
    def from_json(cls, obj) -> "BoostParams":
        return cls(UnitVector3.from_json(obj["n"]), float(obj["alpha"]))


# Coefficient functions of a = (nu.n) * alpha.  Each has a removable
# singularity at a = 0; below the switch threshold an explicit Taylor
# series replaces the closed form.

def _k_minus(a: float, switch: float) -> float:
    """(1 - e^{-a}) / a."""
    if abs(a) < switch:
        return 1.0 - a / 2 + a * a / 6 - a**3 / 24 + a**4 / 120
    return -math.expm1(-a) / a


def _k_plus(a: float, switch: float) -> float:
    """(1 - e^{a}) / a."""
    if abs(a) < switch:
        return -(1.0 + a / 2 + a * a / 6 + a**3 / 24 + a**4 / 120)
    return -math.expm1(a) / a


def _h_cosh(a: float, switch: float) -> float:
    """(cosh a - 1) / a^2, via 2 sinh^2(a/2) to avoid cancellation."""
    if abs(a) < switch:
        return 0.5 + a * a / 24 + a**4 / 720
    sh = math.sinh(0.5 * a)
    return 2.0 * sh * sh / (a * a)


def _compose_prefactor(x: float, switch: float) -> float:
    """x / (1 - e^x); tends to -1 as x -> 0."""
    if abs(x) < switch:
        return -(1.0 - x / 2 + x * x / 12 - x**4 / 720)
    return -x / math.expm1(x)


def _log1p_over(t: float, switch: float) -> float:
    """log(1 + t) / t; tends to 1 as t -> 0."""
    if abs(t) < switch:
        return 1.0 - t / 2 + t * t / 3 - t**3 / 4
    return math.log1p(t) / t


def _cross_matrix(m: np.ndarray) -> np.ndarray:
    """Matrix of the map x -> m x x."""
    return np.array(
        [
            [0.0, -m[2], m[1]],
            [m[2], 0.0, -m[0]],
            [-m[1], m[0], 0.0],
        ]
    )


def generator(nu: UnitVector3, n: UnitVector3) -> np.ndarray:
    """Infinitesimal boost matrix G with dx = G x dalpha.

    The time row and column carry the pure boost along n; the spatial
    block is the rotation generator about nu x n that keeps the preferred
    axis fixed in the moving frame.
    """
    nv = n.as_array()
    m = cross3(nu, n)
    g = np.zeros((4, 4))
    g[0, 1:] = -nv
    g[1:, 0] = -nv
    g[1:, 1:] = _cross_matrix(m)
    return g


def generalized_generator(spec: AnisotropySpec, n: UnitVector3) -> np.ndarray:
    """Boost generator plus the compensating scale generator -r (nu.n) I."""
    s = dot3(spec.nu, n)
    return generator(spec.nu, n) - spec.r * s * np.eye(4)


def boost_matrix(
    nu: UnitVector3, params: BoostParams, tol: Tolerance = DEFAULT_TOL
) -> np.ndarray:
    """Closed-form finite boost; unimodular and interval-preserving."""
    nv = params.n.as_array()
    nuv = nu.as_array()
    alpha = params.alpha
    a = dot3(nu, params.n) * alpha
    c0 = alpha * alpha * _h_cosh(a, tol.limit_switch)
    km = alpha * _k_minus(a, tol.limit_switch)
    kp = alpha * _k_plus(a, tol.limit_switch)

    lam = np.empty((4, 4))
    lam[0, 0] = 1.0 + c0
    row0 = -(km * nv + c0 * nuv)
    lam[0, 1:] = row0
    lam[1:, 0] = kp * nv + c0 * nuv
    lam[1:, 1:] = np.eye(3) - kp * np.outer(nv, nuv) + np.outer(nuv, row0)
    return lam


def boost_matrix_inverse(
    nu: UnitVector3, params: BoostParams, tol: Tolerance = DEFAULT_TOL
) -> np.ndarray:
    """Inverse boost, obtained by negating the rapidity."""
    return boost_matrix(nu, BoostParams(params.n, -params.alpha), tol)


def compose(
    nu: UnitVector3,
    g1: BoostParams,
    g2: BoostParams,
    tol: Tolerance = DEFAULT_TOL,
) -> BoostParams:
    """Group composition: the element whose matrix is L(g2) L(g1).

    g1 acts first.  A result below abs_tol in norm is the identity and is
    returned as (n = nu, alpha = 0).
    """
    nuv = nu.as_array()
    n1, a1 = g1.n.as_array(), g1.alpha
    n2, a2 = g2.n.as_array(), g2.alpha
    s1a = dot3(nu, g1.n) * a1
    s2a = dot3(nu, g2.n) * a2
    x = float(np.dot(nuv, n1 * a1 + n2 * a2))
    bracket = (
        a1 * _k_plus(s1a, tol.limit_switch) * n1
        + math.exp(s1a) * a2 * _k_plus(s2a, tol.limit_switch) * n2
    )
    vec = _compose_prefactor(x, tol.limit_switch) * bracket
    alpha = float(np.linalg.norm(vec))
    if alpha < tol.abs_tol:
        return BoostParams.identity(nu)
    return BoostParams(UnitVector3.normalized(vec / alpha), alpha)


def velocity_from_params(
    nu: UnitVector3, params: BoostParams, tol: Tolerance = DEFAULT_TOL
) -> Velocity3:
    """Velocity of the primed frame for group parameters (n, alpha)."""
    nv = params.n.as_array()
    nuv = nu.as_array()
    alpha = params.alpha
    a = dot3(nu, params.n) * alpha
    km = alpha * _k_minus(a, tol.limit_switch)
    c0 = alpha * alpha * _h_cosh(a, tol.limit_switch)
    v = (km * nv + c0 * nuv) / (1.0 + c0)
    return Velocity3.from_array(v)


def params_from_velocity(
    nu: UnitVector3, v: Velocity3, tol: Tolerance = DEFAULT_TOL
) -> BoostParams:
    """Group parameters (n, alpha) of the boost reaching velocity v.

    Velocities below abs_tol return the identity element by convention.
    The rapidity is evaluated in a cancellation-free form whose series
    branch covers the degenerate (horosphere) band where the textbook
    quotient is 0/0.
    """
    vv = v.as_array()
    vsq = float(np.dot(vv, vv))
    if math.sqrt(vsq) < tol.abs_tol:
        return BoostParams.identity(nu)
    nuv = nu.as_array()
    w = 1.0 - dot3(v, nu)
    gamma_inv = math.sqrt(1.0 - vsq)
    u = vsq / (1.0 + gamma_inv)  # 1 - sqrt(1 - v^2), cancellation-free
    t = (gamma_inv - w) / w
    alpha = math.sqrt(2.0 * u / w) * _log1p_over(t, tol.limit_switch)
    n_vec = vv / math.sqrt(2.0 * w * u) - math.sqrt(u / (2.0 * w)) * nuv
    return BoostParams(UnitVector3.normalized(n_vec), alpha)


def add_velocities_raw(nu: UnitVector3, a1, a2) -> np.ndarray:
    """Velocity composition on plain arrays; admits the boundary point
    a2 = nu, where the result is nu regardless of a1."""
    nuv = nu.as_array()
    a1 = np.asarray(a1, dtype=float)
    a2 = np.asarray(a2, dtype=float)
    g1s = math.sqrt(1.0 - float(np.dot(a1, a1)))
    d1 = 1.0 - float(np.dot(a1, nuv))
    nu_v2 = float(np.dot(nuv, a2))
    v1_v2 = float(np.dot(a1, a2))
    num = (a1 * (1.0 - nu_v2) + a2 * g1s) * d1 + nuv * (
        v1_v2 + nu_v2 * (g1s - 1.0)
    ) * g1s
    den = d1 + v1_v2 * g1s + nu_v2 * (d1 + g1s) * (g1s - 1.0)
    return num / den


def add_velocities(nu: UnitVector3, v1: Velocity3, v2: Velocity3) -> Velocity3:
    """Velocity-space composition consistent with compose(g1, g2).

    v2 is prescribed in the axes of the v1-frame (turned so that nu keeps
    its orientation); as v2 approaches nu the result approaches nu
    regardless of v1.
    """
    return Velocity3.from_array(add_velocities_raw(nu, v1.as_array(), v2.as_array()))


def dilation_factor(spec: AnisotropySpec, v: Velocity3) -> float:
    """Scale factor D = ((1 - v.nu)/sqrt(1 - v^2))^r; strictly positive."""
    vv = v.as_array()
    base = (1.0 - dot3(v, spec.nu)) / math.sqrt(1.0 - float(np.dot(vv, vv)))
    return base**spec.r


def generalized_boost_matrix(
    spec: AnisotropySpec, params: BoostParams, tol: Tolerance = DEFAULT_TOL
) -> np.ndarray:
    """Generalized boost D * Lambda with D = e^{-r (nu.n) alpha}."""
    s = dot3(spec.nu, params.n)
    d = math.exp(-spec.r * s * params.alpha)
    return d * boost_matrix(spec.nu, params, tol)


def axial_rotation(nu: UnitVector3, phi: float) -> np.ndarray:
    """Passive rotation of the spatial axes by phi about nu."""
    nuv = nu.as_array()
    r3 = (
        math.cos(phi) * np.eye(3)
        - math.sin(phi) * _cross_matrix(nuv)
        + (1.0 - math.cos(phi)) * np.outer(nuv, nuv)
    )
    m = np.eye(4)
    m[1:, 1:] = r3
    return m


def translate(x: FourVector, a: FourVector) -> FourVector:
    """Space-time translation; intervals of differences are unchanged."""
    return FourVector(x.t + a.t, x.x + a.x, x.y + a.y, x.z + a.z)


def apply_matrix(m: np.ndarray, x: FourVector) -> FourVector:
    return FourVector.from_array(np.asarray(m, dtype=float) @ x.as_array())
