import itertools
import math
import pathlib

import pytest

from coinqubit import MalevichTriada, ProbabilityTriple, render_svg, triada_sides
from conftest import random_valid

DATA_DIR = pathlib.Path(__file__).parent / "data"


class TestSides:
    @pytest.mark.parametrize(
        "triple, expected",
        [
            ((0.5, 0.5, 0.5), (math.sqrt(0.5),) * 3),
            ((1.0, 1.0, 1.0), (math.sqrt(2.0),) * 3),
            ((0.5, 0.5, 1.0), (math.sqrt(0.5), math.sqrt(1.5), math.sqrt(0.5))),
        ],
    )
    def test_fixtures(self, triple, expected):
        sides = triada_sides(ProbabilityTriple(*triple)).sides()
        assert sides == pytest.approx(expected, abs=1e-12)

    def test_corner_maximum(self):
        # exhaustive corner check: the side polynomial peaks at sqrt(2)
        worst = max(
            max(triada_sides(ProbabilityTriple(*corner)).sides())
            for corner in itertools.product((0.0, 1.0), repeat=3)
        )
        assert worst == pytest.approx(math.sqrt(2.0), abs=1e-12)

    def test_sides_bounded(self, rng):
        for _ in range(1000):
            for side in triada_sides(random_valid(rng)).sides():
                assert 0.0 <= side <= math.sqrt(3.0)

    def test_cyclic_permutation_covariance(self, rng):
        for _ in range(500):
            p = random_valid(rng)
            rotated = ProbabilityTriple(p.p2, p.p3, p.p1)
            l1, l2, l3 = triada_sides(p).sides()
            assert triada_sides(rotated).sides() == pytest.approx(
                (l2, l3, l1), abs=1e-12
            )

    def test_continuity_probe(self):
        # finite-difference Lipschitz probe on a grid: no jumps
        eps = 1e-6
        grid = [0.05, 0.25, 0.5, 0.75, 0.95]
        for p1, p2, p3 in itertools.product(grid, repeat=3):
            base = triada_sides(ProbabilityTriple(p1, p2, p3)).sides()
            bumped = triada_sides(
                ProbabilityTriple(p1 + eps, p2 + eps, p3 + eps)
            ).sides()
            for a, b in zip(base, bumped):
                assert abs(a - b) <= 20.0 * eps


class TestRender:
    def test_deterministic(self):
        t = triada_sides(ProbabilityTriple(0.3, 0.8, 0.6))
        assert render_svg(t, 120.0, labels=True) == render_svg(
            t, 120.0, labels=True
        )

    def test_three_rects_at_scale(self):
        svg = render_svg(MalevichTriada(1.0, 1.0, 1.0), scale=100.0)
        assert svg.count("<rect") == 3
        assert svg.count('width="100.000" height="100.000"') == 3

    def test_zero_side_square_suppressed(self):
        svg = render_svg(MalevichTriada(0.0, 1.0, 1.0), scale=100.0)
        assert svg.count("<rect") == 2
        assert 'fill="black"' not in svg

    def test_white_square_is_stroked(self):
        svg = render_svg(MalevichTriada(1.0, 1.0, 1.0))
        assert 'fill="white" stroke="black" stroke-width="1"' in svg

    def test_rejects_nonpositive_scale(self):
        with pytest.raises(ValueError):
            render_svg(MalevichTriada(1.0, 1.0, 1.0), scale=0.0)

    def test_golden_file(self):
        t = triada_sides(ProbabilityTriple(0.5, 0.5, 0.5))
        golden = (DATA_DIR / "triada_mixed_scale100_labels.svg").read_text(
            encoding="utf-8"
        )
        assert render_svg(t, scale=100.0, labels=True) == golden
