import numpy as np
import pytest

from diskextrema import (
    DomainError,
    ExampleFamily,
    ExpSeriesFunction,
    PowerSeries,
    Reciprocal,
    Rotated,
    SeriesFunction,
    find_min_on_circle,
)
from conftest import central_diff1, central_diff2, random_series


def geometric_sum_oracle(family: ExampleFamily, z: complex, terms: int = 400) -> complex:
    """a0 + u sum_{j>=1} z^{jn}, summed far past machine-negligible tail."""
    w = z**family.n
    return family.a0 + family.u * sum(w**j for j in range(1, terms + 1))


class TestExampleFamilyValues:
    def test_value_at_origin(self):
        fam = ExampleFamily(0.8, 2)
        assert fam.value(0j) == fam.a0

    def test_hand_values(self):
        fam = ExampleFamily(0.8, 2)
        assert complex(fam.value(0.5j)) == pytest.approx(0.6, abs=1e-15)
        assert complex(fam.value(0.5)) == pytest.approx(0.85 / 0.75, abs=1e-15)

    def test_matches_geometric_series(self, rng):
        fam = ExampleFamily(0.9 * np.exp(1j * np.pi / 3), 3)
        for _ in range(25):
            z = 0.9 * rng.uniform(0.1, 1.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            assert complex(fam.value(z)) == pytest.approx(
                geometric_sum_oracle(fam, z), rel=1e-12, abs=1e-12
            )

    def test_unimodular_direction(self):
        for a0 in (0.8, -1.3 + 0.4j, 0.51j, 2.0 * np.exp(2.5j)):
            fam = ExampleFamily(a0, 1)
            assert abs(abs(fam.u) - 1.0) <= 1e-15

    def test_rejects_small_a0(self):
        for bad in (0.5, -0.5, 0.3 + 0.39j, 0.0):
            with pytest.raises(DomainError):
                ExampleFamily(bad, 2)

    def test_rejects_bad_n(self):
        with pytest.raises(DomainError):
            ExampleFamily(0.8, 0)

    def test_rejects_outside_disk(self):
        fam = ExampleFamily(0.8, 2)
        with pytest.raises(DomainError):
            fam.value(1.0)
        with pytest.raises(DomainError):
            fam.deriv1(1.2j)


class TestExampleFamilyDerivatives:
    def test_first_derivative_vanishes_at_origin(self):
        assert ExampleFamily(0.8, 2).deriv1(0j) == 0

    def test_log_derivative_hand_value(self):
        fam = ExampleFamily(0.8, 2)
        z0 = 0.5j
        ratio = z0 * fam.deriv1(z0) / fam.value(z0)
        assert complex(ratio) == pytest.approx(-8.0 / 15.0, abs=1e-15)

    def test_curvature_hand_value(self):
        fam = ExampleFamily(0.8, 2)
        z0 = 0.5j
        d1, d2 = fam.derivatives(z0)
        assert (z0 * d2 / d1).real + 1.0 == pytest.approx(1.2, abs=1e-14)

    @pytest.mark.parametrize("a0,n", [(0.8, 2), (0.9 * np.exp(1j * np.pi / 3), 3), (0.6, 1)])
    def test_against_finite_differences(self, a0, n, rng):
        fam = ExampleFamily(a0, n)
        for _ in range(100):
            z = 0.9 * rng.uniform(0.05, 1.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            fd1 = central_diff1(fam.value, z)
            fd2 = central_diff2(fam.value, z)
            assert complex(fam.deriv1(z)) == pytest.approx(fd1, rel=1e-6, abs=1e-8)
            assert complex(fam.deriv2(z)) == pytest.approx(fd2, rel=1e-4, abs=1e-4)


class TestImageDisk:
    def test_hand_values(self):
        center, radius = ExampleFamily(0.8, 2).image_disk(0.5)
        assert center == pytest.approx(0.8 + 0.0625 / 0.9375, abs=1e-15)
        assert radius == pytest.approx(0.25 / 0.9375, abs=1e-15)

    def test_degenerates_to_point_as_r_vanishes(self):
        fam = ExampleFamily(0.8, 2)
        center, radius = fam.image_disk(1e-8)
        assert abs(center - fam.a0) < 1e-15
        assert radius < 1e-15

    def test_boundary_maps_onto_image_circle(self):
        # Mobius maps send circles to circles: every boundary sample must
        # land exactly on the image circle.
        fam = ExampleFamily(0.9 * np.exp(1j * np.pi / 3), 3)
        center, radius = fam.image_disk(0.7)
        z = 0.7 * np.exp(2j * np.pi * np.arange(4096) / 4096)
        deviation = np.abs(np.abs(fam.value(z) - center) - radius)
        assert float(deviation.max()) < 1e-12

    def test_rejects_bad_radius(self):
        fam = ExampleFamily(0.8, 2)
        for r in (0.0, 1.0, -0.5, 2.0):
            with pytest.raises(DomainError):
                fam.image_disk(r)


class TestMinPoint:
    def test_real_case(self):
        z0, lo = ExampleFamily(0.8, 2).min_point(0.5)
        assert complex(z0) == pytest.approx(0.5j, abs=1e-15)
        assert lo == pytest.approx(0.6, abs=1e-15)

    def test_complex_case(self):
        _, lo = ExampleFamily(0.9 * np.exp(1j * np.pi / 3), 3).min_point(0.7)
        assert lo == pytest.approx(0.9 - 0.343 / 1.343, abs=1e-15)

    def test_approaches_a0_as_r_vanishes(self):
        _, lo = ExampleFamily(0.8, 2).min_point(1e-7)
        assert abs(lo - 0.8) < 1e-13

    def test_agrees_with_numeric_search(self):
        fam = ExampleFamily(0.9 * np.exp(1j * np.pi / 3), 3)
        res = find_min_on_circle(fam, 0.7)
        assert res.value == pytest.approx(fam.min_point(0.7).min_modulus, abs=1e-9)
        # any angle with z^n = -r^n is a legitimate minimizer
        assert abs(np.exp(1j * fam.n * res.theta) + 1.0) < 1e-8

    def test_nonvanishing_bound_at_samples(self, rng):
        fam = ExampleFamily(0.51 + 0.3j, 2)
        r = 0.85
        lo = fam.min_point(r).min_modulus
        assert lo > abs(fam.a0) - 0.5
        for _ in range(50):
            z = r * rng.uniform(0, 1) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            assert abs(complex(fam.value(z))) >= lo - 1e-12


class TestClosedChain:
    def test_real_case_values(self):
        chain = ExampleFamily(0.8, 2).closed_chain(0.5)
        assert chain.m == pytest.approx(8.0 / 15.0, abs=1e-15)
        assert chain.bound == pytest.approx(2.0 / 7.0, abs=1e-15)
        assert chain.schwarz == pytest.approx(1.2, abs=1e-15)

    def test_low_index_case(self):
        chain = ExampleFamily(0.6, 1).closed_chain(0.5)
        assert chain.m == pytest.approx(0.5 / (1.5 * 0.4), abs=1e-15)
        assert chain.bound == pytest.approx(0.5 / 1.3, abs=1e-15)

    def test_limits_as_r_vanishes(self):
        chain = ExampleFamily(0.8, 3).closed_chain(1e-6)
        assert abs(chain.m) < 1e-15
        assert abs(chain.bound) < 1e-15
        assert chain.schwarz == pytest.approx(3.0, abs=1e-5)

    def test_contract_orderings(self, rng):
        for _ in range(40):
            a0 = rng.uniform(0.51, 2.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            fam = ExampleFamily(a0, int(rng.integers(1, 6)))
            chain = fam.closed_chain(rng.uniform(0.05, 0.95))
            assert chain.m > 0
            assert chain.schwarz > 0 > -chain.m
            assert chain.bound < chain.m


class TestSeriesFunction:
    def test_wraps_series_and_derivatives(self, rng):
        s = random_series(rng, n=2, degree=7)
        f = SeriesFunction(s)
        assert f.a0 == s.a0 and f.n == 2
        z = 0.4 - 0.3j
        assert f.value(z) == s(z)
        assert complex(f.deriv1(z)) == pytest.approx(central_diff1(f.value, z), rel=1e-6)
        assert complex(f.deriv2(z)) == pytest.approx(central_diff2(f.value, z), rel=1e-4)

    def test_constant_detection(self):
        assert SeriesFunction(PowerSeries(2.0, 1, [0.0])).is_constant()
        assert SeriesFunction(PowerSeries(2.0, 1, [1e-16])).is_constant()
        assert not SeriesFunction(PowerSeries(2.0, 1, [1e-14])).is_constant()

    def test_monomial_is_not_constant(self):
        # |z^k| is constant on every circle; the detector must not be fooled
        assert not SeriesFunction(PowerSeries(0.0, 3, [1.0])).is_constant()


class TestExpSeriesFunction:
    def test_value_and_derivatives(self, rng):
        h = PowerSeries(0.0, 2, [0.3 + 0.2j, -0.1j, 0.05])
        f = ExpSeriesFunction(1.3 * np.exp(0.7j), h)
        assert f.n == 2
        assert complex(f.value(0j)) == pytest.approx(f.a0, abs=1e-16)
        for _ in range(30):
            z = 0.9 * rng.uniform(0, 1) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            assert complex(f.value(z)) == pytest.approx(
                f.a0 * np.exp(complex(h(z))), rel=1e-14
            )
            assert complex(f.deriv1(z)) == pytest.approx(central_diff1(f.value, z), rel=1e-6)
            assert complex(f.deriv2(z)) == pytest.approx(central_diff2(f.value, z), rel=1e-4)

    def test_never_vanishes(self, rng):
        h = PowerSeries(0.0, 1, [0.9, -0.6j, 0.5])
        f = ExpSeriesFunction(0.55, h)
        z = 0.95 * rng.uniform(0, 1, 200) * np.exp(1j * rng.uniform(0, 2 * np.pi, 200))
        assert np.min(np.abs(f.value(z))) > 0.55 * np.exp(-2.0) - 1e-12

    def test_rejects_bad_exponent(self):
        with pytest.raises(DomainError):
            ExpSeriesFunction(1.0, PowerSeries(0.1, 1, [1.0]))
        with pytest.raises(DomainError):
            ExpSeriesFunction(0.0, PowerSeries(0.0, 1, [1.0]))

    def test_constant_detection(self):
        assert ExpSeriesFunction(2.0, PowerSeries(0.0, 1, [0.0])).is_constant()
        assert not ExpSeriesFunction(2.0, PowerSeries(0.0, 1, [0.1])).is_constant()


class TestWrappers:
    def test_reciprocal_values(self, rng):
        fam = ExampleFamily(0.8, 2)
        g = Reciprocal(fam)
        assert g.a0 == pytest.approx(1.25)
        assert g.n == 2
        for _ in range(20):
            z = 0.9 * rng.uniform(0, 1) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            assert complex(g.value(z)) * complex(fam.value(z)) == pytest.approx(1.0, abs=1e-14)
            assert complex(g.deriv1(z)) == pytest.approx(central_diff1(g.value, z), rel=1e-6)
            assert complex(g.deriv2(z)) == pytest.approx(central_diff2(g.value, z), rel=1e-4)

    def test_reciprocal_rejects_vanishing_origin(self):
        with pytest.raises(DomainError):
            Reciprocal(SeriesFunction(PowerSeries(0.0, 1, [1.0])))

    def test_rotated_values(self, rng):
        fam = ExampleFamily(0.9 * np.exp(1j * np.pi / 3), 3)
        phi = 0.7
        rot = Rotated(fam, phi)
        assert rot.a0 == fam.a0 and rot.n == fam.n
        w = np.exp(1j * phi)
        for _ in range(20):
            z = 0.9 * rng.uniform(0, 1) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            assert complex(rot.value(z)) == pytest.approx(complex(fam.value(w * z)), rel=1e-14)
            assert complex(rot.deriv1(z)) == pytest.approx(central_diff1(rot.value, z), rel=1e-6)
