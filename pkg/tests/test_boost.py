import math

import numpy as np
import pytest
from scipy.linalg import expm

from finslerboost import (
    AnisotropySpec,
    BoostParams,
    FourVector,
    UnitVector3,
    Velocity3,
    add_velocities,
    apply_matrix,
    axial_rotation,
    boost_matrix,
    boost_matrix_inverse,
    compose,
    dilation_factor,
    dot3,
    finsler_interval_sq,
    generalized_boost_matrix,
    generalized_generator,
    generator,
    minkowski_interval,
    params_from_velocity,
    translate,
    velocity_from_params,
)
from finslerboost.boost import add_velocities_raw

NU_Z = UnitVector3(0.0, 0.0, 1.0)
E_X = UnitVector3(1.0, 0.0, 0.0)
ETA = np.diag([1.0, -1.0, -1.0, -1.0])


def rand_unit(rng):
    return UnitVector3.normalized(rng.normal(size=3))


def rand_params(rng):
    return BoostParams(rand_unit(rng), float(rng.uniform(-3, 3)))


def test_generator_parallel_case():
    g = generator(NU_Z, NU_Z)
    expect = np.zeros((4, 4))
    expect[0, 3] = expect[3, 0] = -1.0
    assert np.allclose(g, expect, atol=0)


def test_generator_orthogonal_case():
    g = generator(NU_Z, E_X)
    expect = np.zeros((4, 4))
    expect[0, 1] = expect[1, 0] = -1.0
    expect[1, 3] = 1.0
    expect[3, 1] = -1.0
    assert np.allclose(g, expect, atol=0)


def test_generator_antisymmetric_after_lowering():
    rng = np.random.default_rng(3)
    for _ in range(200):
        g = generator(rand_unit(rng), rand_unit(rng))
        low = ETA @ g
        assert np.max(np.abs(low + low.T)) < 1e-15


def test_boost_identity_at_zero_rapidity():
    assert np.allclose(boost_matrix(NU_Z, BoostParams(NU_Z, 0.0)), np.eye(4), atol=0)


def test_boost_standard_along_axis():
    lam = boost_matrix(NU_Z, BoostParams(NU_Z, 1.0))
    expect = np.eye(4)
    expect[0, 0] = expect[3, 3] = math.cosh(1.0)
    expect[0, 3] = expect[3, 0] = -math.sinh(1.0)
    assert np.max(np.abs(lam - expect)) < 1e-15


def test_boost_matches_exponential():
    rng = np.random.default_rng(5)
    lam = boost_matrix(NU_Z, BoostParams(E_X, 0.7))
    assert np.max(np.abs(lam - expm(0.7 * generator(NU_Z, E_X)))) < 1e-10
    for _ in range(1000):
        nu, g = rand_unit(rng), rand_params(rng)
        lam = boost_matrix(nu, g)
        assert np.max(np.abs(lam - expm(g.alpha * generator(nu, g.n)))) < 1e-10


def test_boost_unimodular_and_interval_preserving():
    rng = np.random.default_rng(8)
    for _ in range(300):
        nu, g = rand_unit(rng), rand_params(rng)
        lam = boost_matrix(nu, g)
        assert abs(np.linalg.det(lam) - 1.0) < 1e-10
        x = FourVector(2.0, *rng.uniform(-1, 1, size=3))
        assert minkowski_interval(apply_matrix(lam, x)) == pytest.approx(
            minkowski_interval(x), rel=1e-10, abs=1e-10
        )


def test_boost_inverse():
    rng = np.random.default_rng(13)
    lam = boost_matrix_inverse(NU_Z, BoostParams(NU_Z, 1.0))
    assert lam[0, 3] == pytest.approx(math.sinh(1.0))
    for _ in range(200):
        nu, g = rand_unit(rng), rand_params(rng)
        prod = boost_matrix_inverse(nu, g) @ boost_matrix(nu, g)
        assert np.max(np.abs(prod - np.eye(4))) < 1e-10


def test_compose_identity_element():
    rng = np.random.default_rng(17)
    g1 = rand_params(rng)
    nu = rand_unit(rng)
    out = compose(nu, g1, BoostParams.identity(nu))
    assert out.alpha == pytest.approx(g1.alpha, abs=1e-12)
    assert np.allclose(out.n.as_array(), g1.n.as_array(), atol=1e-12)


def test_compose_parallel_rapidities_add():
    g = compose(NU_Z, BoostParams(NU_Z, 0.5), BoostParams(NU_Z, 0.5))
    assert g.alpha == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(g.n.as_array(), NU_Z.as_array(), atol=1e-12)


def test_compose_matches_matrix_product_and_additivity():
    rng = np.random.default_rng(19)
    for _ in range(1000):
        nu = rand_unit(rng)
        g1, g2 = rand_params(rng), rand_params(rng)
        g = compose(nu, g1, g2)
        prod = boost_matrix(nu, g2) @ boost_matrix(nu, g1)
        assert np.max(np.abs(boost_matrix(nu, g) - prod)) < 1e-10
        s = dot3(nu, g.n) * g.alpha
        s12 = dot3(nu, g1.n) * g1.alpha + dot3(nu, g2.n) * g2.alpha
        assert abs(s - s12) < 1e-12


def test_velocity_examples():
    assert velocity_from_params(NU_Z, BoostParams(NU_Z, 0.0)).speed() == 0.0
    v = velocity_from_params(NU_Z, BoostParams(NU_Z, 0.8))
    assert np.allclose(v.as_array(), math.tanh(0.8) * NU_Z.as_array(), atol=1e-14)
    v = velocity_from_params(NU_Z, BoostParams(E_X, 1.0))
    assert np.allclose(v.as_array(), (2 / 3, 0.0, 1 / 3), atol=1e-12)


def test_params_from_velocity_examples():
    g = params_from_velocity(NU_Z, Velocity3(0.0, 0.0, math.tanh(1.0)))
    assert g.alpha == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(g.n.as_array(), NU_Z.as_array(), atol=1e-9)
    g = params_from_velocity(NU_Z, Velocity3(2 / 3, 0.0, 1 / 3))
    assert g.alpha == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(g.n.as_array(), E_X.as_array(), atol=1e-12)
    ident = params_from_velocity(NU_Z, Velocity3(0.0, 0.0, 0.0))
    assert ident.alpha == 0.0 and ident.n == NU_Z


def test_parametrization_round_trip():
    rng = np.random.default_rng(23)
    for _ in range(1000):
        nu = rand_unit(rng)
        g = BoostParams(rand_unit(rng), float(rng.uniform(1e-3, 3.0)))
        back = params_from_velocity(nu, velocity_from_params(nu, g))
        assert abs(back.alpha - g.alpha) < 1e-9
        assert np.max(np.abs(back.n.as_array() - g.n.as_array())) < 1e-9


def test_add_velocities_identity_and_fixed_point():
    rng = np.random.default_rng(29)
    v1 = Velocity3(0.3, -0.2, 0.1)
    assert np.allclose(
        add_velocities(NU_Z, v1, Velocity3(0, 0, 0)).as_array(), v1.as_array(), atol=1e-15
    )
    for _ in range(200):
        nu = rand_unit(rng)
        v = velocity_from_params(nu, rand_params(rng))
        out = add_velocities_raw(nu, v.as_array(), nu.as_array())
        assert np.max(np.abs(out - nu.as_array())) < 1e-12


def test_add_velocities_matches_composition():
    rng = np.random.default_rng(31)
    for _ in range(1000):
        nu = rand_unit(rng)
        g1, g2 = rand_params(rng), rand_params(rng)
        v1 = velocity_from_params(nu, g1)
        v2 = velocity_from_params(nu, g2)
        direct = add_velocities(nu, v1, v2)
        via = velocity_from_params(nu, compose(nu, g1, g2))
        assert np.max(np.abs(direct.as_array() - via.as_array())) < 1e-10
        assert direct.speed() < 1.0


def test_dilation_examples():
    spec = AnisotropySpec(NU_Z, 1.0)
    assert dilation_factor(spec, Velocity3(0, 0, 0)) == 1.0
    assert dilation_factor(spec, Velocity3(0.6, 0, 0)) == pytest.approx(1.25, rel=1e-14)
    for r in (-0.5, 0.3, 1.7):
        spec = AnisotropySpec(NU_Z, r)
        alpha = 0.9
        v = Velocity3(0, 0, math.tanh(alpha))
        assert dilation_factor(spec, v) == pytest.approx(math.exp(-r * alpha), rel=1e-12)


def test_generalized_boost():
    rng = np.random.default_rng(37)
    g = rand_params(rng)
    nu = rand_unit(rng)
    assert np.array_equal(
        generalized_boost_matrix(AnisotropySpec(nu, 0.0), g), boost_matrix(nu, g)
    )
    # orthogonal direction: the dilatation switches off
    from finslerboost.subgroups import perpendicular_to

    perp = perpendicular_to(nu)
    gp = BoostParams(perp, 1.3)
    spec = AnisotropySpec(nu, 0.8)
    assert np.max(
        np.abs(generalized_boost_matrix(spec, gp) - boost_matrix(nu, gp))
    ) < 1e-14
    for _ in range(1000):
        nu, g = rand_unit(rng), rand_params(rng)
        spec = AnisotropySpec(nu, float(rng.uniform(-0.9, 0.9)))
        dl = generalized_boost_matrix(spec, g)
        assert np.max(
            np.abs(dl - expm(g.alpha * generalized_generator(spec, g.n)))
        ) < 1e-10
        s = dot3(nu, g.n)
        d4 = math.exp(-4.0 * spec.r * s * g.alpha)
        assert np.linalg.det(dl) == pytest.approx(d4, rel=1e-10)


def test_generalized_boost_preserves_finsler_interval():
    rng = np.random.default_rng(41)
    for _ in range(500):
        nu, g = rand_unit(rng), rand_params(rng)
        spec = AnisotropySpec(nu, float(rng.uniform(-0.9, 0.9)))
        x3 = rng.uniform(-1, 1, size=3)
        x = FourVector(float(np.linalg.norm(x3)) + rng.uniform(0.1, 2.0), *x3)
        xp = apply_matrix(generalized_boost_matrix(spec, g), x)
        assert finsler_interval_sq(xp, spec) == pytest.approx(
            finsler_interval_sq(x, spec), rel=1e-10
        )


def test_axial_rotation():
    assert np.allclose(axial_rotation(NU_Z, 0.0), np.eye(4), atol=0)
    assert np.max(np.abs(axial_rotation(NU_Z, 2 * math.pi) - np.eye(4))) < 1e-10
    q = axial_rotation(NU_Z, math.pi / 2)
    x = apply_matrix(q, FourVector(0, 1, 0, 0))
    assert np.allclose(x.as_array(), (0, 0, -1, 0), atol=1e-15)
    y = apply_matrix(q, FourVector(0, 0, 1, 0))
    assert np.allclose(y.as_array(), (0, 1, 0, 0), atol=1e-15)


def test_axial_rotation_preserves_finsler_interval():
    rng = np.random.default_rng(43)
    for _ in range(200):
        nu = rand_unit(rng)
        spec = AnisotropySpec(nu, float(rng.uniform(-0.9, 0.9)))
        q = axial_rotation(nu, float(rng.uniform(0, 2 * math.pi)))
        x3 = rng.uniform(-1, 1, size=3)
        x = FourVector(float(np.linalg.norm(x3)) + rng.uniform(0.1, 2.0), *x3)
        assert finsler_interval_sq(apply_matrix(q, x), spec) == pytest.approx(
            finsler_interval_sq(x, spec), rel=1e-10
        )


def test_translate():
    x = FourVector(1, 2, 3, 4)
    assert translate(x, FourVector(0, 0, 0, 0)) == x
    assert translate(x, FourVector(1, 1, 1, 1)) == FourVector(2, 3, 4, 5)
    y = FourVector(0.5, -1, 2, 0)
    a = FourVector(3, 1, -2, 7)
    dx = translate(x, a).as_array() - translate(y, a).as_array()
    assert np.array_equal(dx, x.as_array() - y.as_array())


def test_canonical_boost_params():
    g = BoostParams(E_X, -1.5)
    assert g.alpha == 1.5
    assert g.n == UnitVector3(-1.0, 0.0, 0.0)
    assert np.max(
        np.abs(boost_matrix(NU_Z, g) - expm(-1.5 * generator(NU_Z, E_X)))
    ) < 1e-10
