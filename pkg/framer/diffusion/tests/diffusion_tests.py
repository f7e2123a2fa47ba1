# coding: utf-8

# framer/diffusion/tests/diffusion_tests.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import math
import os
from glob import glob

import numpy as np

from framer.tests.common import TestCase, rng


class ZeroModel(object):
    def __init__(self):
        self.calls = []

    def __call__(self, z_t, t, lr_cond, c=None, taps=True):
        self.calls.append(t)
        return np.zeros_like(z_t), []


class ScheduleTest(TestCase):
    def test_linear(self):
        schedule = NoiseSchedule.linear()

        self.assertEqual(schedule.T, 1000)
        self.assertAlmostEqual(schedule.betas[0], 1e-4, 15)
        self.assertAlmostEqual(schedule.betas[-1], 0.02, 15)
        self.assertTrue((np.diff(schedule.betas) > 0).all())
        self.assertTrue((np.diff(schedule.alpha_bars) < 0).all())
        self.assertEqual(schedule.alpha_bar(0), 1.0)
        self.assertAlmostEqual(schedule.alpha_bar(1), 1 - 1e-4, 15)

    def test_cosine(self):
        schedule = NoiseSchedule.from_config(ScheduleConfig(kind='cosine',
                                                            steps=200))

        self.assertEqual(len(schedule), 200)
        self.assertTrue((np.diff(schedule.alpha_bars) < 0).all())
        self.assertTrue(((schedule.betas > 0) & (schedule.betas < 1)).all())

    def test_config(self):
        self.assertRaises(ConfigException, ScheduleConfig.from_dict,
                          {'beta_start': 0.1, 'beta_end': 0.01})
        self.assertRaises(ConfigException, ScheduleConfig.from_dict,
                          {'kind': 'sigmoid'})

    def test_timesteps(self):
        schedule = NoiseSchedule.linear(50)
        t = schedule.sample_timesteps(1000, rng())

        self.assertEqual(t.min(), 1)
        self.assertEqual(t.max(), 50)


class QSampleTest(TestCase):
    def test_limit(self):
        schedule = NoiseSchedule.linear(10, 1e-12, 2e-12)
        z0 = rng().normal(size=(2, 3, 4, 4))

        z_t = q_sample(z0, 1, rng(1).normal(size=z0.shape), schedule)
        np.testing.assert_allclose(z_t, z0, atol=1e-5)

    def test_formula(self):
        schedule = NoiseSchedule([0.75])
        z0 = rng().normal(size=(3, 5))
        noise = rng(1).normal(size=(3, 5))

        z_t = q_sample(z0, 1, noise, schedule)
        np.testing.assert_allclose(z_t, 0.5 * z0 + math.sqrt(0.75) * noise,
                                   atol=1e-15)

    def test_per_sample(self):
        schedule = NoiseSchedule.linear()
        z0 = rng().normal(size=(2, 1, 3, 3))
        noise = rng(1).normal(size=z0.shape)

        z_t = q_sample(z0, [10, 900], noise, schedule)
        np.testing.assert_array_equal(z_t[1], q_sample(z0[1:], 900,
                                                       noise[1:], schedule)[0])

    def test_variance(self):
        schedule = NoiseSchedule.linear()
        generator = rng(2)
        z0 = generator.normal(0.0, 2.0, size=10000)
        noise = generator.normal(size=10000)

        bar = schedule.alpha_bar(400)
        expected = bar * z0.var() + (1 - bar)
        actual = q_sample(z0, 400, noise, schedule).var()
        self.assertLess(abs(actual / expected - 1), 0.05)

    def test_errors(self):
        schedule = NoiseSchedule.linear()
        z0 = np.zeros((1, 4))

        for t in (0, 1001, 2.5):
            self.assertRaises(DomainException, q_sample, z0, t, z0, schedule)
        self.assertRaises(ShapeException, q_sample, z0, 5, np.zeros(4),
                          schedule)


class NoiseLossTest(TestCase):
    def test_values(self):
        noise = rng().normal(size=(2, 3, 4, 4))

        self.assertEqual(noise_loss(noise, noise).item(), 0.0)
        self.assertAlmostEqual(noise_loss(noise + 1, noise).item(), 1.0, 12)

    def test_oracle(self):
        pred = rng(1).normal(size=(2, 3, 4, 4))
        noise = rng(2).normal(size=(2, 3, 4, 4))

        total = 0.0
        for a, b in zip(pred.ravel(), noise.ravel()):
            total += (a - b) ** 2
        self.assertLessEqual(abs(noise_loss(pred, noise).item() -
                                 total / pred.size), 1e-12)

    def test_gradient(self):
        pred = tensor(rng(3).normal(size=(2, 5)), requires_grad=True)
        noise = rng(4).normal(size=(2, 5))

        noise_loss(pred, noise).backward()
        np.testing.assert_allclose(pred.grad, 2 * (pred.data - noise) / 10,
                                   atol=1e-15)

    def test_mismatch(self):
        self.assertRaises(ShapeException, noise_loss, np.zeros((2, 3)),
                          np.zeros((3, 2)))


class SampleTest(TestCase):
    def test_sequence(self):
        self.assertEqual(list(timestep_sequence(1000, 2)), [1000, 1])
        ts = timestep_sequence(1000, 50)
        self.assertEqual(len(set(ts)), 50)
        self.assertTrue((np.diff(ts) < 0).all())
        self.assertRaises(DomainException, timestep_sequence, 10, 11)

    def test_zero_model(self):
        schedule = NoiseSchedule.linear()
        model = ZeroModel()
        lr = np.zeros((2, 3, 4, 4))

        out = sample(model, lr, None, schedule, 2, seed=5, method='ddim',
                     size=16)
        initial = np.random.default_rng(5).standard_normal((2, 3, 16, 16))

        self.assertEqual(model.calls, [1000, 1])
        np.testing.assert_allclose(
            out, initial / math.sqrt(schedule.alpha_bar(1000)), rtol=1e-12)

    def test_deterministic(self):
        config = BackboneConfig(n_layers=3, channels=4, image_size=8,
                                cond_dim=0, time_dim=8)
        model = build_backbone(config, seed=1)
        schedule = NoiseSchedule.linear(100)
        lr = rng().uniform(size=(2, 3, 2, 2))

        for method in ('ddim', 'ddpm'):
            first = sample(model, lr, None, schedule, 5, 3, method)
            second = sample(model, lr, None, schedule, 5, 3, method)
            self.assertEqual(first.tobytes(), second.tobytes())

        other = sample(model, lr, None, schedule, 5, 4, 'ddpm')
        self.assertNotEqual(first.tobytes(), other.tobytes())

    def test_shape(self):
        schedule = NoiseSchedule.linear(20)

        for extent in (4, 8, 16):
            lr = np.full((1, 3, extent, extent), 0.5)
            out = sample(ZeroModel(), lr, None, schedule, 3, 0, size=16)
            self.assertEqual(out.shape, (1, 3, 16, 16))

    def test_independent_of_losses(self):
        root = os.path.dirname(os.path.dirname(os.path.dirname(
            os.path.abspath(__file__))))
        for package in ('diffusion', 'backbone', 'degradation', 'tensor'):
            for path in glob(os.path.join(root, package, '*.py')) + \
                    glob(os.path.join(root, package, '_impl', '*.py')):
                with open(path) as f:
                    self.assertNotIn('framer.loss', f.read(), path)


from framer.util import DomainException, ShapeException, ConfigException
from framer.tensor import tensor
from framer.backbone import BackboneConfig, build_backbone
from framer.diffusion import (NoiseSchedule, ScheduleConfig, q_sample,
                              noise_loss, sample, timestep_sequence)
