import math

import numpy as np
import pytest

from twistspec import closedform, measures, shapeopt
from twistspec.errors import DomainError
from twistspec.measures import MeasureSpec

G1 = MeasureSpec.gaussian(1)
M30 = MeasureSpec.power(3, 0.0)


class TestLambdaOfSplit:
    def test_symmetric_composition(self):
        sol = shapeopt.lambda_of_split(G1, 0.5, 0.5)
        cfg = measures.config_from_split(G1, 0.5, 0.5)
        want = closedform.twisted_pair_gauss(cfg).eigenvalue
        assert sol.eigenvalue == pytest.approx(want, rel=1e-12)

    def test_relabeling_symmetry(self):
        a = shapeopt.lambda_of_split(G1, 0.5, 0.6).eigenvalue
        b = shapeopt.lambda_of_split(G1, 0.5, 0.4).eigenvalue
        assert a == pytest.approx(b, rel=1e-9)

    def test_two_unit_balls(self):
        total = 2 * measures.halfball_mass(M30, 1.0)
        sol = shapeopt.lambda_of_split(M30, total, 0.5)
        assert sol.eigenvalue == pytest.approx(math.pi ** 2, rel=1e-9)


class TestShapeDerivative:
    def test_zero_at_symmetry(self):
        sol = shapeopt.lambda_of_split(G1, 0.5, 0.5)
        assert shapeopt.shape_derivative(sol, sol.config, 0.5) == pytest.approx(
            0.0, abs=1e-10)

    def test_pushes_back_toward_half(self):
        sol = shapeopt.lambda_of_split(G1, 0.5, 0.55)
        d = shapeopt.shape_derivative(sol, sol.config, 0.5)
        assert d > 0.0
        sol2 = shapeopt.lambda_of_split(G1, 0.5, 0.45)
        assert shapeopt.shape_derivative(sol2, sol2.config, 0.5) < 0.0

    def test_agrees_with_curve_fd(self):
        curve = shapeopt.scan(G1, 0.5, points=21)
        for i in range(2, len(curve.splits) - 2):
            tol = max(1e-4, 1e-3 * abs(curve.derivative_fd[i]))
            assert abs(curve.derivative_analytic[i]
                       - curve.derivative_fd[i]) <= tol

    def test_unnormalized_rejected(self):
        sol = shapeopt.lambda_of_split(G1, 0.5, 0.5)
        sol.normalization = 2.0
        with pytest.raises(DomainError):
            shapeopt.shape_derivative(sol, sol.config, 0.5)


class TestScan:
    def test_grid_shape_and_window(self):
        curve = shapeopt.scan(G1, 0.5, points=11)
        assert len(curve.splits) == 11
        assert curve.splits[5] == pytest.approx(0.5)
        np.testing.assert_allclose(curve.splits + curve.splits[::-1], 1.0)
        assert np.all(np.isfinite(curve.lambdas))

    def test_gaussian_feasibility_window_respected(self):
        curve = shapeopt.scan(G1, 0.95, points=11)
        lo, hi = curve.window
        assert lo > 1 - 0.5 / 0.95 - 1e-12
        assert hi < 0.5 / 0.95 + 1e-12

    def test_empty_window_rejected(self):
        with pytest.raises(DomainError):
            shapeopt.split_grid(G1, 0.5, points=4)  # even point count

    def test_monotone_decreasing_into_center(self):
        curve = shapeopt.scan(G1, 0.5, points=21)
        mid = 10
        left = curve.lambdas[:mid + 1]
        assert np.all(np.diff(left) < 0)


class TestCertify:
    @pytest.mark.parametrize("measure,total", [
        (G1, 0.5),
        (M30, 2 * measures.halfball_mass(M30, 1.0)),
        (MeasureSpec.power(3, 2.0), 3.0),
    ])
    def test_passes(self, measure, total):
        curve = shapeopt.scan(measure, total, points=21)
        rep = shapeopt.certify_minimum(curve)
        assert rep.passed, [c.detail for c in rep.failures()]

    def test_detects_injected_minimum_shift(self):
        curve = shapeopt.scan(G1, 0.5, points=11)
        curve.lambdas[0] = curve.lambdas.min() - 1.0
        rep = shapeopt.certify_minimum(curve)
        assert not rep.passed
        names = {c.name for c in rep.failures()}
        assert "grid_minimum_at_half" in names

    def test_detects_asymmetry(self):
        curve = shapeopt.scan(G1, 0.5, points=11)
        curve.lambdas[1] += 1e-4
        rep = shapeopt.certify_minimum(curve)
        assert any(c.name == "curve_symmetry" for c in rep.failures())
