import numpy as np
import pytest

from frontalforge.catalog import catalog
from frontalforge.frontal import SampledMap, sample
from frontalforge.io import _split_arcs, curve_to_svg, sampled_map_to_csv
from frontalforge.transforms import orthotomic


class TestCsv:
    def test_header_with_gauss(self):
        F = catalog("circle")
        text = sampled_map_to_csv(sample(F, F.domain.grid([4])))
        assert text.splitlines()[0] == "t1,f1,f2,nu1,nu2"

    def test_header_without_gauss(self):
        F = catalog("sphere")
        sm = sample(F, F.domain.grid([3, 3]), with_gauss=False)
        assert sampled_map_to_csv(sm).splitlines()[0] == "t1,t2,f1,f2,f3"

    def test_values_round_trip(self):
        F = catalog("circle")
        sm = sample(F, F.domain.grid([8]))
        lines = sampled_map_to_csv(sm).splitlines()[1:]
        parsed = np.array([[float(v) for v in ln.split(",")]
                           for ln in lines])
        np.testing.assert_array_equal(parsed[:, 1:3], sm.values)
        np.testing.assert_array_equal(parsed[:, 3:5], sm.gauss)

    def test_deterministic(self):
        F = catalog("cusp")
        sm = sample(F, F.domain.grid([16]))
        assert sampled_map_to_csv(sm) == sampled_map_to_csv(sm)

    def test_unix_line_endings(self):
        F = catalog("circle")
        text = sampled_map_to_csv(sample(F, F.domain.grid([4])))
        assert "\r" not in text
        assert text.endswith("\n")


class TestSplitArcs:
    def test_continuous_curve_single_arc(self):
        t = np.linspace(0.0, 2.0 * np.pi, 100, endpoint=False)
        pts = np.stack([np.cos(t), np.sin(t)], axis=-1)
        arcs = _split_arcs(pts)
        assert len(arcs) == 1
        assert arcs[0].shape[0] == 100

    def test_jump_splits(self):
        a = np.stack([np.linspace(0, 1, 50), np.zeros(50)], axis=-1)
        b = a + np.array([0.0, 5.0])
        arcs = _split_arcs(np.vstack([a, b]))
        assert len(arcs) == 2
        assert arcs[0].shape[0] == 50

    def test_points_preserved(self):
        # splitting never drops or reorders samples
        F = catalog("square")
        res = orthotomic(F, [0.3, -0.2]).result
        t = np.linspace(0.0, 8.0, 2048, endpoint=False)[:, None]
        pts = res.eval_f(t)
        arcs = _split_arcs(pts)
        np.testing.assert_array_equal(np.vstack(arcs), pts)


class TestSvg:
    def test_structure(self):
        t = np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False)
        pts = np.stack([np.cos(t), np.sin(t)], axis=-1)
        text = curve_to_svg(pts)
        assert text.startswith('<?xml version="1.0" encoding="UTF-8"?>\n')
        assert text.count("<polyline") == 1
        assert "viewBox=" in text
        assert text.rstrip().endswith("</svg>")

    def test_deterministic(self):
        pts = np.random.default_rng(0).normal(size=(32, 2))
        assert curve_to_svg(pts) == curve_to_svg(pts)

    def test_rejects_3d(self):
        with pytest.raises(ValueError):
            curve_to_svg(np.zeros((4, 3)))

    def test_degenerate_point_cloud(self):
        text = curve_to_svg(np.zeros((5, 2)))
        assert "<polyline" in text  # still a valid document


def test_sampled_map_validation():
    with pytest.raises(ValueError):
        SampledMap(params=np.zeros((3, 1)), values=np.zeros((4, 2)))
