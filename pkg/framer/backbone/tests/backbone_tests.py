# coding: utf-8

# framer/backbone/tests/backbone_tests.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import os
from tempfile import mkdtemp
from shutil import rmtree

import numpy as np

from framer.tests.common import TestCase, rng


def small(kind='dit_like', **kw):
    values = dict(kind=kind, n_layers=3, channels=4, image_size=8,
                  in_channels=2, cond_dim=3, time_dim=8)
    values.update(kw)

    return BackboneConfig.from_dict(values)


def inputs(config, batch=2, seed=0):
    generator = rng(seed)
    shape = (batch, config.in_channels, config.image_size,
             config.image_size)

    return generator.normal(size=shape), generator.uniform(size=shape)


def randomize_head(model, seed=0):
    generator = rng(seed)
    for name in ('head.weight', 'head.bias'):
        p = model.params[name]
        p.data[...] = generator.normal(size=p.shape) * 0.1


class ForwardTest(TestCase):
    def test_shapes(self):
        for kind in ('dit_like', 'unet_like'):
            for n in (3, 5, 8):
                config = small(kind, n_layers=n)
                model = build_backbone(config, seed=1)
                z_t, lr = inputs(config)

                eps, taps = model(z_t, [10, 500], lr, rng().normal(
                    size=(2, 3)))
                self.assertEqual(eps.shape, z_t.shape)
                self.assertEqual(len(taps), n)
                self.assertEqual([tap.i for tap in taps],
                                 list(range(1, n + 1)))
                self.assertEqual([tap.is_teacher for tap in taps].count(True),
                                 1)
                self.assertTrue(taps[-1].is_teacher)
                self.assertEqual(taps[-1].depth, 1.0)
                self.assertEqual([tuple(tap.shape[1:]) for tap in taps],
                                 model.tap_shapes())

    def test_zero_head(self):
        config = small()
        z_t, lr = inputs(config)
        eps, _ = build_backbone(config)(z_t, 3, lr)

        self.assertTrue((eps.data == 0).all())

    def test_dit_taps_share_shape(self):
        model = build_backbone(small(n_layers=4))

        self.assertEqual(len(set(model.tap_shapes())), 1)

    def test_unet_taps_vary(self):
        model = build_backbone(small('unet_like', n_layers=5))
        shapes = model.tap_shapes()

        self.assertEqual(shapes[0], (8, 4, 4))
        self.assertEqual(shapes[2], (16, 2, 2))
        self.assertEqual(shapes[-1], (4, 8, 8))

    def test_taps_are_observations(self):
        for kind in ('dit_like', 'unet_like'):
            config = small(kind)
            model = build_backbone(config, seed=2)
            randomize_head(model)
            z_t, lr = inputs(config, seed=1)

            with_taps, taps = model(z_t, 7, lr, taps=True)
            without, none = model(z_t, 7, lr, taps=False)
            self.assertEqual(none, [])
            self.assertEqual(with_taps.data.tobytes(), without.data.tobytes())

    def test_deterministic_init(self):
        first = build_backbone(small('unet_like'), seed=5).state_dict()
        second = build_backbone(small('unet_like'), seed=5).state_dict()

        self.assertEqual(list(first), list(second))
        for name in first:
            np.testing.assert_array_equal(first[name], second[name])

    def test_size_mismatch(self):
        config = small()
        model = build_backbone(config)
        z_t, lr = inputs(config)

        self.assertRaises(ShapeException, model, z_t, 1, lr[..., :4, :4])
        self.assertRaises(ShapeException, model, z_t[:, :1], 1, lr[:, :1])
        self.assertRaises(ShapeException, model, z_t, 1, lr, np.zeros((2, 5)))


class AdapterTest(TestCase):
    def test_identity(self):
        feature = tensor(rng().normal(size=(2, 4, 8, 8)))
        tap = FeatureTap(2, feature, False, 0.5)

        self.assertIs(adapt_tap(tap, (4, 8, 8)), feature)

    def test_shape(self):
        adapters = Adapters([(8, 16, 16), (16, 32, 32)], seed=1)
        tap = FeatureTap(1, tensor(rng().normal(size=(3, 8, 16, 16))), False,
                         0.5)

        self.assertEqual(adapt_tap(tap, adapters.target, adapters).shape,
                         (3, 16, 32, 32))
        self.assertEqual(adapters.layers, set([1]))

    def test_missing_adapter(self):
        tap = FeatureTap(1, tensor(np.ones((1, 8, 4, 4))), False, 0.5)

        self.assertRaises(ShapeException, adapt_tap, tap, (4, 8, 8))

    def test_constant_upsample(self):
        field = tensor(np.full((1, 2, 4, 4), 0.37))

        resized = resize_bilinear(field, (16, 16)).data
        np.testing.assert_allclose(resized, 0.37, atol=1e-15)

    def test_unet(self):
        config = small('unet_like', n_layers=6)
        model = build_backbone(config)
        adapters = Adapters(model.tap_shapes(), seed=3)
        z_t, lr = inputs(config)
        _, taps = model(z_t, 4, lr)

        features = adapters(taps)
        self.assertEqual(set(f.shape for f in features), set([(2, 4, 8, 8)]))
        self.assertIs(features[-1], taps[-1].feature)

    def test_noise_loss_skips_adapters(self):
        config = small('unet_like')
        model = build_backbone(config)
        randomize_head(model)
        adapters = Adapters(model.tap_shapes(), seed=3)
        z_t, lr = inputs(config)
        noise = rng(9).normal(size=z_t.shape)

        eps, taps = model(z_t, 4, lr)
        adapters(taps)
        ((eps - noise) ** 2).mean().backward()

        self.assertTrue(all(p.grad is None for p in adapters.parameters()))
        self.assertTrue(any(p.grad is not None for p in model.parameters()))


class CountTest(TestCase):
    def test_matches_model(self):
        for kind in ('dit_like', 'unet_like'):
            for n in (3, 4, 6, 9):
                config = small(kind, n_layers=n)
                self.assertEqual(count_params(config),
                                 build_backbone(config).params.count())

    def test_dit_formula(self):
        c, n = 16, 8
        config = BackboneConfig(n_layers=n, channels=c, in_channels=3,
                                cond_dim=8, time_dim=64)

        stem = 9 * 6 * c + c + 64 * c + c + 8 * c + c + 9 * c * 3 + 3
        block = 11 * c * c + 3 * c
        self.assertEqual(count_params(config), stem + n * block)

    def test_one_more_layer(self):
        c = 16
        base = count_params(BackboneConfig(n_layers=8, channels=c))
        more = count_params(BackboneConfig(n_layers=9, channels=c))
        self.assertEqual(more - base, 11 * c * c + 3 * c)

        # two middle blocks at the deepest level in both
        base = count_params(BackboneConfig('unet_like', 6, c))
        more = count_params(BackboneConfig('unet_like', 7, c))
        width = 4 * c
        self.assertEqual(more - base, 10 * width * width + 2 * width +
                         c * width + width)

    def test_doubling_channels(self):
        config = dict(n_layers=8, cond_dim=0)
        narrow = count_params(dict(channels=16, **config))
        wide = count_params(dict(channels=32, **config))

        self.assertGreater(wide / float(narrow), 3.5)
        self.assertLess(wide / float(narrow), 4.0)

    def test_rejected(self):
        for n in (0, 2):
            self.assertRaises(ConfigException, count_params,
                              {'n_layers': n})
        self.assertRaises(ConfigException, count_params, {'kind': 'vit'})
        self.assertRaises(ConfigException, count_params,
                          {'kind': 'unet_like', 'image_size': 30})


class CheckpointTest(TestCase):
    def setUp(self):
        self.directory = mkdtemp()

    def tearDown(self):
        rmtree(self.directory)

    def test_roundtrip(self):
        model = build_backbone(small('unet_like'), seed=4)
        prefix = os.path.join(self.directory, 'ckpt-10')

        path = save_checkpoint(prefix, model.state_dict(), {'step': 10})
        self.assertTrue(path.endswith('ckpt-10.json'))
        self.assertTrue(os.path.exists(prefix + '.bin'))

        arrays, meta = load_checkpoint(path)
        self.assertEqual(meta, {'step': 10})
        self.assertEqual(list(arrays), list(model.state_dict()))

        other = build_backbone(small('unet_like'), seed=8)
        other.load_state_dict(arrays)
        for name, value in model.state_dict().items():
            np.testing.assert_allclose(other.state_dict()[name], value,
                                       rtol=1e-6, atol=1e-7)
            self.assertEqual(other.state_dict()[name].dtype, np.float64)

    def test_payload_layout(self):
        arrays = {'a': np.arange(3.0), 'b': np.full((2, 2), -1.5)}
        save_checkpoint(os.path.join(self.directory, 'x'), arrays)

        payload = np.fromfile(os.path.join(self.directory, 'x.bin'),
                              dtype='<f4')
        self.assertEqual(list(payload), [0, 1, 2, -1.5, -1.5, -1.5, -1.5])

    def test_invalid(self):
        path = os.path.join(self.directory, 'bad.json')
        with open(path, 'w') as f:
            f.write('{"format": "other", "version": 1}')

        self.assertRaises(DataException, load_checkpoint, path)
        self.assertRaises(DataException, load_checkpoint,
                          os.path.join(self.directory, 'missing'))

    def test_mismatch(self):
        model = build_backbone(small(), seed=4)
        arrays = model.state_dict()
        arrays['stem.bias'] = np.zeros(7)

        self.assertRaises(ShapeException, model.load_state_dict, arrays)
        del arrays['stem.bias']
        self.assertRaises(DataException, model.load_state_dict, arrays)


class FullGradientTest(TestCase):
    def check(self, kind):
        config = small(kind, channels=2, in_channels=1, cond_dim=0,
                       time_dim=4)
        model = build_backbone(config, seed=3)
        randomize_head(model, seed=4)
        adapters = Adapters(model.tap_shapes(), seed=5)
        z_t, lr = inputs(config, seed=6)
        noise = rng(7).normal(size=z_t.shape)
        masks = make_band_masks(8, 8, 0.3)
        loss_config = LossConfig()
        frozen = {}

        def objective():
            eps, taps = model(z_t, 250, lr)
            losses, records, _ = framer_objective(adapters(taps), loss_config,
                                                  masks, rng(11), frozen)
            noise_loss = ((eps - noise) ** 2).mean()
            return total_loss(noise_loss, losses, records).tensor

        params = dict(model.named_parameters())
        for name, p in adapters.params:
            params[name] = p
        report = grad_check(objective, params, h=1e-5, tol=1e-3,
                            max_elements=4, seed=1)
        self.assertTrue(report.passed, str(report))

    def test_dit(self):
        self.check('dit_like')

    def test_unet(self):
        self.check('unet_like')


from framer.util import ShapeException, ConfigException, DataException
from framer.tensor import tensor, resize_bilinear, grad_check
from framer.spectral import make_band_masks
from framer.loss import LossConfig, framer_objective, total_loss
from framer.backbone import (BackboneConfig, FeatureTap, Adapters, adapt_tap,
                             build_backbone, count_params, save_checkpoint,
                             load_checkpoint)
