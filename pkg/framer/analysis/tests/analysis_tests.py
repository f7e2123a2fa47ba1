# coding: utf-8

# framer/analysis/tests/analysis_tests.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import math
import os
from shutil import rmtree
from tempfile import mkdtemp

import numpy as np

from framer.tests.common import TestCase, rng, pink_field


class ScaledModel(object):

    """Two layer toy whose first tap is the second scaled by ``scale``."""

    def __init__(self, scales=(2.0, 1.0)):
        self.scales = scales

    def __call__(self, z_t, t, lr_cond, c=None, taps=True):
        base = np.asarray(z_t) + 0.5 * np.asarray(lr_cond)
        n = len(self.scales)
        result = [FeatureTap(i, tensor(base * s), i == n, i / float(n))
                  for i, s in enumerate(self.scales, 1)]

        return tensor(np.zeros_like(base)), result


def small(kind):
    return BackboneConfig(kind=kind, n_layers=5, channels=4, image_size=16,
                          cond_dim=0, time_dim=8)


def batch(seed=0, size=16, count=4):
    generator = rng(seed)
    hr = np.stack([pink_field(generator, size) for _ in range(count)])
    lr = np.stack([pink_field(generator, size) for _ in range(count)])

    return hr, lr


class CurveTest(TestCase):
    def test_final_layer(self):
        for kind in ('dit_like', 'unet_like'):
            model = build_backbone(small(kind), seed=1)
            adapters = Adapters(model.tap_shapes(), seed=2)
            rows = layer_cosine_curve(model, batch(), 300, adapters=adapters)

            self.assertEqual(len(rows), 5)
            self.assertEqual(rows[-1].depth, 1.0)
            self.assertEqual(rows[-1].cos_lf, 1.0)
            self.assertEqual(rows[-1].cos_hf, 1.0)

    def test_untrained_range(self):
        model = build_backbone(small('dit_like'), seed=3)
        rows = layer_cosine_curve(model, batch(1), 700)

        self.assertEqual([r.depth for r in rows], [0.2, 0.4, 0.6, 0.8, 1.0])
        for row in rows:
            self.assertEqual(row.t, 700)
            for value in (row.cos_lf, row.cos_hf):
                self.assertTrue(np.isfinite(value))
                self.assertLessEqual(abs(value), 1.0 + 1e-12)

    def test_scaled_layer(self):
        rows = layer_cosine_curve(ScaledModel(), batch(2), 300)

        self.assertAlmostEqual(rows[0].cos_lf, 1.0, 12)
        self.assertAlmostEqual(rows[0].cos_hf, 1.0, 12)

    def test_scale_invariant(self):
        data = batch(3)
        first = layer_cosine_curve(ScaledModel((1.0, 3.0, 1.0)), data, 500)
        second = layer_cosine_curve(ScaledModel((7.0, 0.5, 2.0)), data, 500)

        for a, b in zip(first, second):
            self.assertAlmostEqual(a.cos_lf, b.cos_lf, 12)
            self.assertAlmostEqual(a.cos_hf, b.cos_hf, 12)

    def test_timesteps(self):
        model = build_backbone(small('dit_like'), seed=4)
        rows = layer_curves(model, batch(), (300, 700), seed=5)

        self.assertEqual([r.t for r in rows], [300] * 5 + [700] * 5)
        self.assertEqual(rows[:5], layer_cosine_curve(model, batch(), 300,
                                                      seed=5))

    def test_missing_adapters(self):
        model = build_backbone(small('unet_like'), seed=1)

        self.assertRaises(ShapeException, layer_cosine_curve, model,
                          batch(), 300)

    def test_mid_layer_mean(self):
        rows = [CurveRow(300, d, 0.0, d) for d in (0.2, 0.4, 0.6, 0.8, 1.0)]

        self.assertAlmostEqual(mid_layer_mean(rows), 0.6, 12)
        self.assertEqual(mid_layer_mean(rows, 'lf'), 0.0)
        self.assertTrue(math.isnan(mid_layer_mean(rows[:1])))


class SimilarityTest(TestCase):
    def setUp(self):
        self.masks = make_band_masks(16, 16, 0.2)

    def test_diagonal(self):
        features = rng().normal(size=(5, 3, 16, 16))

        for band in ('lf', 'hf'):
            matrix = cross_sample_matrix(features, self.masks, band)
            self.assertEqual(matrix.shape, (5, 5))
            self.assertLessEqual(np.abs(np.diag(matrix) - 1).max(), 1e-9)
            np.testing.assert_array_equal(matrix, matrix.T)

    def test_duplicate(self):
        features = rng(1).normal(size=(3, 2, 16, 16))
        features[2] = features[0]

        matrix = cross_sample_matrix(features, self.masks, 'hf')
        self.assertAlmostEqual(matrix[0, 2], 1.0, 9)

    def test_low_band_shared(self):
        generator = rng(2)
        features = np.stack([pink_field(generator, 16) for _ in range(8)])

        lf = cross_sample_matrix(features, self.masks, 'lf')
        hf = cross_sample_matrix(features, self.masks, 'hf')
        self.assertGreater(mean_off_diagonal(lf), mean_off_diagonal(hf))

    def test_single_sample(self):
        self.assertRaises(DataException, cross_sample_matrix,
                          np.zeros((1, 3, 16, 16)), self.masks, 'lf')


class MetricsTest(TestCase):
    def test_identical(self):
        img = pink_field(rng(), 32)

        self.assertEqual(psnr(img, img), 100.0)
        self.assertAlmostEqual(ssim(img, img), 1.0, 9)

    def test_constant_difference(self):
        a = np.full((3, 16, 16), 100.0)

        value = psnr(a, a + 16, peak=255.0)
        self.assertAlmostEqual(value, 20 * math.log10(255 / 16.0), 9)
        self.assertAlmostEqual(value, 24.048, 3)

    def test_constant_ssim(self):
        a = np.full((16, 16), 0.3)
        b = np.full((16, 16), 0.6)

        c1 = 0.01 ** 2
        expected = (2 * 0.3 * 0.6 + c1) / (0.3 ** 2 + 0.6 ** 2 + c1)
        self.assertLessEqual(abs(ssim(a, b) - expected), 1e-9)

    def test_checkerboard(self):
        board = (np.indices((32, 32)).sum(axis=0) % 2).astype(np.float64)

        self.assertLess(ssim(board, 1 - board), 0.1)

    def test_noise_monotonic(self):
        img = pink_field(rng(1), 32)
        noise = rng(2).normal(size=img.shape)

        values = [psnr(img, img + noise * s / 255.0) for s in (1, 2, 4, 8)]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_mismatch(self):
        self.assertRaises(ShapeException, psnr, np.zeros((4, 4)),
                          np.zeros((4, 5)))
        self.assertRaises(ShapeException, ssim, np.zeros((4, 4)),
                          np.zeros((5, 4)))
        self.assertRaises(ShapeException, ssim, np.zeros(4), np.zeros(4))

    def test_rows(self):
        images = [pink_field(rng(seed), 16) for seed in range(3)]
        rows = image_metrics(images, images, ids=['a', 'b', 'c'])

        self.assertEqual([r.image_id for r in rows], ['a', 'b', 'c'])
        self.assertEqual(set(r.psnr for r in rows), set([100.0]))


class OutputTest(TestCase):
    def setUp(self):
        self.directory = mkdtemp()

    def tearDown(self):
        rmtree(self.directory)

    def test_curves(self):
        path = os.path.join(self.directory, 'layer_curves.csv')
        rows = [CurveRow(300, 0.5, 0.25, -0.125), CurveRow(300, 1.0, 1.0, 1.0)]

        write_layer_curves(path, rows)
        with open(path) as f:
            self.assertEqual(f.readline().strip(), 't,depth,cos_lf,cos_hf')

        parsed = read_csv(path)
        self.assertEqual(parsed[0], {'t': '300', 'depth': '0.5',
                                     'cos_lf': '0.25', 'cos_hf': '-0.125'})

    def test_matrix(self):
        path = os.path.join(self.directory, 'simmatrix.csv')
        matrix = np.array([[1.0, 0.5], [0.5, 1.0]])

        write_matrix(path, matrix)
        np.testing.assert_array_equal(np.loadtxt(path, delimiter=','), matrix)

    def test_metrics(self):
        path = os.path.join(self.directory, 'metrics.csv')

        write_metrics(path, [MetricRow(0, 31.5, 0.875)])
        self.assertEqual(read_csv(path), [{'image_id': '0', 'psnr': '31.5',
                                           'ssim': '0.875'}])

    def test_missing(self):
        self.assertRaises(DataException, read_csv,
                          os.path.join(self.directory, 'absent.csv'))


from framer.util import ShapeException, DataException
from framer.tensor import tensor
from framer.spectral import make_band_masks
from framer.backbone import BackboneConfig, build_backbone, Adapters, \
    FeatureTap
from framer.analysis import (CurveRow, layer_cosine_curve, layer_curves,
                             mid_layer_mean, cross_sample_matrix,
                             mean_off_diagonal, MetricRow, psnr, ssim,
                             image_metrics, write_layer_curves, write_matrix,
                             write_metrics, read_csv)
