"""Seeded randomized conformance suites.

Each suite draws from an isolated PCG64 generator derived from the master
seed, so reports are reproducible across platforms.  Sampling: directions
uniform on the sphere, rapidity uniform in [-3, 3], anisotropy parameter
uniform in [-0.9, 0.9], speeds with uniform rapidity in [0, 3].

The matrix exponential used by the oracle suites is scipy's Pade
scaling-and-squaring implementation; production transforms never route
through it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from . import boost, spinor, subgroups, velocity_space
from .core import (
    DEFAULT_TOL,
    AnisotropySpec,
    FourVector,
    Tolerance,
    UnitVector3,
    Velocity3,
    finsler_interval_sq,
    minkowski_interval,
)

__all__ = ["PropertyResult", "CheckReport", "SUITES", "run_suite", "run_all"]


@dataclass
class PropertyResult:
    name: str
    tolerance: float
    max_deviation: float = 0.0
    relative: bool = False

    def record(self, dev: float) -> None:
        if dev > self.max_deviation:
            self.max_deviation = float(dev)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance

    def to_json(self) -> dict:
        return {
            "property": self.name,
            "tolerance": self.tolerance if math.isfinite(self.tolerance) else None,
            "max_deviation": self.max_deviation,
            "pass": self.passed,
        }


@dataclass
class CheckReport:
    suite: str
    seed: int
    samples: int
    properties: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    @property
    def max_deviation(self) -> float:
        return max((p.max_deviation for p in self.properties), default=0.0)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "vacuous": self.samples == 0,
            "max_deviation": self.max_deviation,
            "pass": self.passed,
            "properties": [p.to_json() for p in self.properties],
        }


def _unit(rng) -> UnitVector3:
    while True:
        v = rng.normal(size=3)
        n = np.linalg.norm(v)
        if n > 1e-8:
            return UnitVector3.normalized(v / n)


def _alpha(rng) -> float:
    return float(rng.uniform(-3.0, 3.0))


def _aniso(rng) -> float:
    return float(rng.uniform(-0.9, 0.9))


def _speed_vec(rng) -> Velocity3:
    speed = math.tanh(rng.uniform(0.0, 3.0))
    return Velocity3.from_array(speed * _unit(rng).as_array())


def _params(rng) -> boost.BoostParams:
    return boost.BoostParams(_unit(rng), _alpha(rng))


def _timelike(rng) -> FourVector:
    x = rng.uniform(-1.0, 1.0, size=3)
    t = float(np.linalg.norm(x)) + rng.uniform(0.1, 2.0)
    return FourVector(t, *x)


def _maxdiff(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def _reldiff(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def suite_oracle(rng, samples, tol):
    p_lam = PropertyResult("boost-vs-exponential", 1e-10)
    p_gen = PropertyResult("generalized-boost-vs-exponential", 1e-10)
    for _ in range(samples):
        nu, g = _unit(rng), _params(rng)
        spec = AnisotropySpec(nu, _aniso(rng))
        lam = boost.boost_matrix(nu, g, tol)
        p_lam.record(_maxdiff(lam, expm(g.alpha * boost.generator(nu, g.n))))
        dl = boost.generalized_boost_matrix(spec, g, tol)
        p_gen.record(
            _maxdiff(dl, expm(g.alpha * boost.generalized_generator(spec, g.n)))
        )
    return [p_lam, p_gen]


def suite_closure(rng, samples, tol):
    p_close = PropertyResult("composition-matches-matrix-product", 1e-10)
    p_add = PropertyResult("axis-rapidity-additivity", 1e-12)
    p_assoc = PropertyResult("associativity", 1e-10)
    for _ in range(samples):
        nu = _unit(rng)
        g1, g2, g3 = _params(rng), _params(rng), _params(rng)
        g12 = boost.compose(nu, g1, g2, tol)
        l1 = boost.boost_matrix(nu, g1, tol)
        l2 = boost.boost_matrix(nu, g2, tol)
        p_close.record(_maxdiff(boost.boost_matrix(nu, g12, tol), l2 @ l1))
        s12 = boost.dot3(nu, g12.n) * g12.alpha
        s1 = boost.dot3(nu, g1.n) * g1.alpha
        s2 = boost.dot3(nu, g2.n) * g2.alpha
        p_add.record(abs(s12 - (s1 + s2)))
        left = boost.compose(nu, boost.compose(nu, g1, g2, tol), g3, tol)
        right = boost.compose(nu, g1, boost.compose(nu, g2, g3, tol), tol)
        p_assoc.record(
            _maxdiff(
                boost.boost_matrix(nu, left, tol), boost.boost_matrix(nu, right, tol)
            )
        )
    return [p_close, p_add, p_assoc]


def suite_metric(rng, samples, tol):
    p_fin = PropertyResult("anisotropic-interval-invariance", 1e-10, relative=True)
    p_mink = PropertyResult("minkowski-invariance-at-r0", 1e-10, relative=True)
    p_det = PropertyResult("determinant-scaling", 1e-10, relative=True)
    for _ in range(samples):
        nu, g = _unit(rng), _params(rng)
        r = _aniso(rng)
        spec = AnisotropySpec(nu, r)
        x = _timelike(rng)
        dl = boost.generalized_boost_matrix(spec, g, tol)
        xp = boost.apply_matrix(dl, x)
        p_fin.record(
            _reldiff(finsler_interval_sq(xp, spec, tol), finsler_interval_sq(x, spec, tol))
        )
        lam = boost.boost_matrix(nu, g, tol)
        p_mink.record(
            _reldiff(minkowski_interval(boost.apply_matrix(lam, x)), minkowski_interval(x))
        )
        s = boost.dot3(nu, g.n)
        p_det.record(
            _reldiff(float(np.linalg.det(dl)), math.exp(-4.0 * r * s * g.alpha))
        )
    return [p_fin, p_mink, p_det]


def suite_roundtrip(rng, samples, tol):
    p_n = PropertyResult("direction-roundtrip", 1e-9)
    p_a = PropertyResult("rapidity-roundtrip", 1e-9)
    degenerate = min(100, samples)
    for i in range(samples):
        nu = _unit(rng)
        if i < degenerate:
            # force |nu.n alpha| below the series threshold
            alpha = float(rng.uniform(0.5, 3.0))
            target = float(rng.uniform(-1e-4, 1e-4))
            s = target / alpha
            perp = subgroups.perpendicular_to(nu)
            n = UnitVector3.normalized(
                math.sqrt(1.0 - s * s) * perp.as_array() + s * nu.as_array()
            )
            g = boost.BoostParams(n, alpha)
        else:
            g = boost.BoostParams(_unit(rng), float(rng.uniform(1e-3, 3.0)))
        v = boost.velocity_from_params(nu, g, tol)
        back = boost.params_from_velocity(nu, v, tol)
        p_n.record(_maxdiff(back.n.as_array(), g.n.as_array()))
        p_a.record(abs(back.alpha - g.alpha))
    return [p_n, p_a]


def suite_velocity_addition(rng, samples, tol):
    p_match = PropertyResult("addition-matches-composition", 1e-10)
    p_nu = PropertyResult("preferred-direction-fixed-point", 1e-12)
    for _ in range(samples):
        nu = _unit(rng)
        g1, g2 = _params(rng), _params(rng)
        v1 = boost.velocity_from_params(nu, g1, tol)
        v2 = boost.velocity_from_params(nu, g2, tol)
        direct = boost.add_velocities(nu, v1, v2)
        via = boost.velocity_from_params(nu, boost.compose(nu, g1, g2, tol), tol)
        p_match.record(_maxdiff(direct.as_array(), via.as_array()))
        res = boost.add_velocities_raw(nu, v1.as_array(), nu.as_array())
        p_nu.record(_maxdiff(res, nu.as_array()))
    return [p_match, p_nu]


def suite_spinor(rng, samples, tol):
    p_pow = PropertyResult("generator-power-identities", 1e-12)
    p_int = PropertyResult("intertwining", 1e-10)
    p_exp = PropertyResult("closed-form-vs-exponential", 1e-10)
    p_rep = PropertyResult("one-parameter-representation", 1e-10)
    p_det = PropertyResult("unimodularity", 1e-10, relative=True)
    eye = np.eye(4, dtype=complex)
    gammas = spinor.gamma_basis().gamma
    for _ in range(samples):
        nu, n = _unit(rng), _unit(rng)
        alpha = _alpha(rng)
        s = boost.dot3(nu, n)
        k = spinor.spinor_generator(nu, n)
        p_pow.record(_maxdiff(k @ k, s * s * eye))
        p_pow.record(_maxdiff(k @ k @ k, s * s * k))
        g = boost.BoostParams(n, alpha)
        smat = spinor.spinor_boost(nu, g, tol)
        sinv = spinor.spinor_boost(nu, boost.BoostParams(n, -alpha), tol)
        lam = boost.boost_matrix(nu, g, tol)
        for i in range(4):
            rhs = sum(lam[i, m] * gammas[m] for m in range(4))
            p_int.record(_maxdiff(sinv @ gammas[i] @ smat, rhs))
        p_exp.record(_maxdiff(smat, expm(0.5 * alpha * k)))
        a2 = _alpha(rng)
        both = spinor.spinor_boost(nu, boost.BoostParams(n, alpha + a2), tol)
        p_rep.record(
            _maxdiff(
                smat @ spinor.spinor_boost(nu, boost.BoostParams(n, a2), tol), both
            )
        )
        p_det.record(abs(complex(np.linalg.det(smat)) - 1.0))
    return [p_pow, p_int, p_exp, p_rep, p_det]


def _random_bispinor(rng) -> np.ndarray:
    return rng.normal(size=4) + 1j * rng.normal(size=4)


def suite_bispinor(rng, samples, tol):
    p_two = PropertyResult("closed-form-vs-parameter-path", 1e-9, relative=True)
    p_rho = PropertyResult("density-weight", 1e-10, relative=True)
    p_cur = PropertyResult("current-weight", 1e-10)
    for _ in range(samples):
        nu = _unit(rng)
        spec = AnisotropySpec(nu, _aniso(rng))
        v = _speed_vec(rng)
        direct = spinor.bispinor_matrix(spec, v, tol)
        via = spinor.bispinor_matrix_via_params(spec, v, tol)
        scale = float(np.max(np.abs(direct)))
        p_two.record(_maxdiff(direct, via) / max(scale, 1e-300))
        psi = _random_bispinor(rng)
        psi_p = direct @ psi
        d = boost.dilation_factor(spec, v)
        rho = complex(spinor.dirac_adjoint(psi) @ psi).real
        rho_p = complex(spinor.dirac_adjoint(psi_p) @ psi_p).real
        p_rho.record(_reldiff(rho_p, d**-3 * rho))
        g = boost.params_from_velocity(nu, v, tol)
        lam = boost.boost_matrix(nu, g, tol)
        j = spinor.bilinear_current(psi)
        j_p = spinor.bilinear_current(psi_p)
        expect = d**-3 * (lam @ j)
        p_cur.record(_maxdiff(j_p, expect) / max(1.0, float(np.max(np.abs(expect)))))
    return [p_two, p_rho, p_cur]


def suite_bispinor_invariant(rng, samples, tol):
    p_inv = PropertyResult("invariant-form", 1e-9, relative=True)
    for _ in range(samples):
        nu = _unit(rng)
        spec = AnisotropySpec(nu, _aniso(rng))
        v = _speed_vec(rng)
        while True:
            psi = _random_bispinor(rng)
            rho = complex(spinor.dirac_adjoint(psi) @ psi).real
            if abs(rho) > 0.1:
                break
        before = spinor.finsler_bispinor_invariant(spec, psi, tol)
        after = spinor.finsler_bispinor_invariant(
            spec, spinor.bispinor_transform(spec, v, psi, tol), tol
        )
        p_inv.record(_reldiff(after, before))
    return [p_inv]


def suite_subgroups(rng, samples, tol):
    p_ab_inv = PropertyResult("abelian-invariants", 1e-10)
    p_comm = PropertyResult("abelian-commutativity", 1e-10)
    p_match = PropertyResult("abelian-vs-orthogonal-boost", 1e-10)
    p_scale = PropertyResult("axial-scaling-laws", 1e-10, relative=True)
    p_ratio = PropertyResult("axial-ratio-invariant", 1e-9, relative=True)
    p_flow = PropertyResult("axial-flow-additivity", 1e-10)
    for _ in range(samples):
        nu = _unit(rng)
        r = _aniso(rng)
        spec = AnisotropySpec(nu, r)
        e1 = subgroups.perpendicular_to(nu)
        e2 = UnitVector3.normalized(np.cross(nu.as_array(), e1.as_array()))
        th1, th2 = rng.uniform(0.0, 2.0 * math.pi, size=2)
        n1 = UnitVector3.normalized(
            math.cos(th1) * e1.as_array() + math.sin(th1) * e2.as_array()
        )
        n2 = UnitVector3.normalized(
            math.cos(th2) * e1.as_array() + math.sin(th2) * e2.as_array()
        )
        a1, a2 = rng.uniform(-2.0, 2.0, size=2)
        x = _timelike(rng)
        pa1 = subgroups.AbelianParams(n1, float(a1))
        pa2 = subgroups.AbelianParams(n2, float(a2))

        v1 = subgroups.abelian_velocity(nu, pa1)
        xp = subgroups.abelian_transform_v(nu, v1, x, tol)
        p_ab_inv.record(_reldiff(minkowski_interval(xp), minkowski_interval(x)))
        p_ab_inv.record(
            _reldiff(
                xp.t - boost.dot3(nu, xp.spatial()), x.t - boost.dot3(nu, x.spatial())
            )
        )

        one = subgroups.abelian_transform(nu, pa2, subgroups.abelian_transform(nu, pa1, x))
        other = subgroups.abelian_transform(nu, pa1, subgroups.abelian_transform(nu, pa2, x))
        p_comm.record(_maxdiff(one.as_array(), other.as_array()))

        lam = boost.generalized_boost_matrix(spec, boost.BoostParams(n1, float(a1)), tol)
        p_match.record(
            _maxdiff(subgroups.abelian_transform(nu, pa1, x).as_array(),
                     boost.apply_matrix(lam, x).as_array())
        )

        ax = subgroups.AxialParams(float(a1))
        xa = subgroups.axial_transform(spec, ax, x)
        inv0 = subgroups.axial_invariants(spec, x)
        inv1 = subgroups.axial_invariants(spec, xa)
        p_scale.record(
            _reldiff(inv1.nu_projection, math.exp((1.0 - r) * ax.alpha) * inv0.nu_projection)
        )
        p_scale.record(
            _reldiff(inv1.interval_sq, math.exp(-2.0 * r * ax.alpha) * inv0.interval_sq)
        )
        if inv0.cylinder_ratio > 1e-6:
            p_ratio.record(_reldiff(inv1.cylinder_ratio, inv0.cylinder_ratio))

        ax2 = subgroups.AxialParams(float(a2))
        chained = subgroups.axial_transform(spec, ax2, xa)
        joint = subgroups.axial_transform(
            spec, subgroups.AxialParams(float(a1 + a2)), x
        )
        p_flow.record(_maxdiff(chained.as_array(), joint.as_array()))
    return [p_ab_inv, p_comm, p_match, p_scale, p_ratio, p_flow]


def suite_velocity_space(rng, samples, tol):
    p_iso = PropertyResult("distance-isometry", 1e-9, relative=True)
    p_horo = PropertyResult("horosphere-invariance", 1e-9, relative=True)
    p_cyl = PropertyResult("cylinder-invariance", 1e-9, relative=True)
    p_dil = PropertyResult("dilation-equals-level-power", 1e-12)
    for _ in range(samples):
        nu = _unit(rng)
        r = _aniso(rng)
        spec = AnisotropySpec(nu, r)
        frame_v = _speed_vec(rng)
        va, vb = _speed_vec(rng), _speed_vec(rng)
        ia = velocity_space.induced_motion(nu, frame_v, va, tol)
        ib = velocity_space.induced_motion(nu, frame_v, vb, tol)
        d0 = velocity_space.lobachevsky_distance(va, vb)
        d1 = velocity_space.lobachevsky_distance(ia, ib)
        if d0 > 1e-6:
            p_iso.record(_reldiff(d0, d1))

        pa = subgroups.AbelianParams(
            subgroups.perpendicular_to(nu), float(rng.uniform(-2.0, 2.0))
        )
        horo_frame = subgroups.abelian_velocity(nu, pa)
        im = velocity_space.induced_motion(nu, horo_frame, va, tol)
        p_horo.record(
            _reldiff(
                velocity_space.horosphere_level(nu, im),
                velocity_space.horosphere_level(nu, va),
            )
        )

        axial_frame = Velocity3.from_array(math.tanh(_alpha(rng)) * nu.as_array())
        im2 = velocity_space.induced_motion(nu, axial_frame, va, tol)
        c0 = velocity_space.cylinder_level(nu, va)
        c1 = velocity_space.cylinder_level(nu, im2)
        if c0 > 1e-6:
            p_cyl.record(_reldiff(c0, c1))

        p_dil.record(
            abs(
                boost.dilation_factor(spec, va)
                - velocity_space.horosphere_level(nu, va) ** r
            )
        )
    return [p_iso, p_horo, p_cyl, p_dil]


def suite_branch(rng, samples, tol):
    p_lam = PropertyResult("boost-branch-continuity", 1e-9)
    p_vel = PropertyResult("velocity-branch-continuity", 1e-9)
    p_spin = PropertyResult("spinor-branch-continuity", 1e-9)
    # force the generic and series branches on either side of the threshold
    generic = Tolerance(tol.abs_tol, tol.rel_tol, 1e-300)
    series = Tolerance(tol.abs_tol, tol.rel_tol, 1.0)
    for _ in range(samples):
        nu = _unit(rng)
        alpha = float(rng.uniform(0.5, 3.0))
        sign = 1.0 if rng.uniform() < 0.5 else -1.0
        s = sign * tol.limit_switch / alpha
        perp = subgroups.perpendicular_to(nu)
        n = UnitVector3.normalized(
            math.sqrt(1.0 - s * s) * perp.as_array() + s * nu.as_array()
        )
        g = boost.BoostParams(n, alpha)
        p_lam.record(
            _maxdiff(boost.boost_matrix(nu, g, generic), boost.boost_matrix(nu, g, series))
        )
        p_vel.record(
            _maxdiff(
                boost.velocity_from_params(nu, g, generic).as_array(),
                boost.velocity_from_params(nu, g, series).as_array(),
            )
        )
        p_spin.record(
            _maxdiff(spinor.spinor_boost(nu, g, generic), spinor.spinor_boost(nu, g, series))
        )
    return [p_lam, p_vel, p_spin]


SUITES = {
    "oracle": suite_oracle,
    "closure": suite_closure,
    "metric": suite_metric,
    "roundtrip": suite_roundtrip,
    "velocity-addition": suite_velocity_addition,
    "spinor": suite_spinor,
    "bispinor": suite_bispinor,
    "bispinor-invariant": suite_bispinor_invariant,
    "subgroups": suite_subgroups,
    "velocity-space": suite_velocity_space,
    "branch": suite_branch,
}


def run_suite(
    name: str, seed: int = 0, samples: int = 1000, tol: Tolerance = DEFAULT_TOL
) -> CheckReport:
    """Run one named suite with a generator derived from (seed, suite index)."""
    index = list(SUITES).index(name)
    rng = np.random.default_rng([seed, index])
    if samples == 0:
        props = [PropertyResult(f"{name} (vacuous)", math.inf)]
    else:
        props = SUITES[name](rng, samples, tol)
    return CheckReport(suite=name, seed=seed, samples=samples, properties=props)


def run_all(
    names=None, seed: int = 0, samples: int = 1000, tol: Tolerance = DEFAULT_TOL
):
    names = list(SUITES) if names is None else list(names)
    return [run_suite(n, seed, samples, tol) for n in names]
