# coding: utf-8

# framer/tests/cli_tests.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from __future__ import with_statement

import json
import os
from contextlib import redirect_stderr, redirect_stdout
from shutil import rmtree
from tempfile import mkdtemp

import numpy as np
from six import StringIO

from framer.tests.common import TestCase


TINY = """\
steps: 2
batch_size: 2
data_count: 4
log_every: 1
checkpoint_every: 1
eval_samples: 3
metric_samples: 1
sample_steps: 2
backbone: {n_layers: 3, channels: 4, image_size: 16, cond_dim: 0,
           time_dim: 8}
degradation: {final: {crop: 16}}
"""


class CliTest(TestCase):
    def setUp(self):
        self.directory = mkdtemp()
        self.config = self.path('tiny.yaml')
        with open(self.config, 'w') as f:
            f.write(TINY)

    def tearDown(self):
        rmtree(self.directory)

    def path(self, *parts):
        return os.path.join(self.directory, *parts)

    def run_cli(self, *argv):
        out, err = StringIO(), StringIO()
        with redirect_stdout(out):
            with redirect_stderr(err):
                code = main(list(argv))

        return code, out.getvalue(), err.getvalue()

    def train(self, name, *extra):
        return self.run_cli('train', '--config', self.config, '--seed', '3',
                            '--output', self.path(name), *extra)

    def test_usage(self):
        self.assertEqual(self.run_cli()[0], 2)
        self.assertEqual(self.run_cli('train', '--config', self.config)[0], 2)
        self.assertEqual(self.run_cli('train', '--seed', '1', '--colour')[0],
                         2)
        self.assertEqual(self.run_cli('--help')[0], 0)

    def test_library_error(self):
        code, _, err = self.train('bad', '--set', 'steps=0')

        self.assertEqual(code, 1)
        self.assertIn('steps', err)

        code, _, _ = self.run_cli('metrics', '--pred', self.path('none'),
                                  '--ref', self.path('none'), '--out',
                                  self.path('m.csv'))
        self.assertEqual(code, 1)

    def test_train(self):
        code, out, _ = self.train('a')
        self.assertEqual(code, 0)
        self.assertIn('step 2', out)
        self.assertEqual(self.train('b')[0], 0)

        with open(self.path('a', 'losses.jsonl'), 'rb') as a:
            with open(self.path('b', 'losses.jsonl'), 'rb') as b:
                self.assertEqual(a.read(), b.read())

        restored = load_config(self.path('a', 'config.yaml'))
        self.assertEqual(restored.seed, 3)
        self.assertEqual(restored.steps, 2)

    def test_set_overrides_flags(self):
        self.assertEqual(self.train('run', '--steps', '5', '--set',
                                    'steps=1')[0], 0)

        self.assertEqual(len(read_csv(self.path('run', 'metrics.csv'))), 1)
        with open(self.path('run', 'losses.jsonl')) as f:
            self.assertEqual(len(f.read().splitlines()), 1)

    def test_degrade_and_metrics(self):
        code, _, _ = self.run_cli('degrade', '--config', self.config,
                                  '--seed', '1', '--count', '2', '--out',
                                  self.path('pairs'))
        self.assertEqual(code, 0)

        images = ImageDirectory(self.path('pairs'))
        self.assertEqual(len(images), 6)
        self.assertEqual(images[images.names.index('synthetic-0_lr.png')]
                         .shape, (3, 4, 4))

        reference = self.path('ref')
        os.makedirs(reference)
        for name in ('synthetic-0_hr.png', 'synthetic-1_hr.png'):
            write_image(os.path.join(reference, name),
                        read_image(self.path('pairs', name)))

        only_hr = self.path('pred')
        os.makedirs(only_hr)
        for name in ('synthetic-0_hr.png', 'synthetic-1_hr.png'):
            write_image(os.path.join(only_hr, name),
                        read_image(self.path('pairs', name)))

        self.assertEqual(self.run_cli('metrics', '--pred', only_hr, '--ref',
                                      reference, '--peak', '255', '--out',
                                      self.path('m.csv'))[0], 0)
        rows = read_csv(self.path('m.csv'))
        self.assertEqual([r['psnr'] for r in rows], ['100', '100'])

    def degrade(self, name, *extra):
        return self.run_cli('degrade', '--seed', '4', '--count', '2',
                            '--set', 'degradation.final.crop=16', '--out',
                            self.path(name), *extra)

    def manifest(self, name):
        with open(self.path(name, 'manifest.json')) as f:
            return json.load(f)

    def test_degrade_manifest(self):
        self.assertEqual(self.degrade('pairs', '--scale', '2')[0], 0)
        manifest = self.manifest('pairs')

        self.assertEqual(manifest['seed'], 4)
        self.assertEqual(manifest['config']['scale'], 2)
        self.assertEqual(manifest['config']['final']['crop'], 16)
        self.assertEqual(len(manifest['config_hash']), 64)
        self.assertEqual([p['name'] for p in manifest['pairs']],
                         ['synthetic-0', 'synthetic-1'])

        for pair in manifest['pairs']:
            hr = read_image(self.path('pairs', pair['hr']))
            lr = read_image(self.path('pairs', pair['lr']))
            lr_resized = read_image(self.path('pairs', pair['lr_resized']))
            self.assertEqual(hr.shape, (3, 16, 16))
            self.assertEqual(lr.shape, (3, 8, 8))
            self.assertEqual(lr_resized.shape, (3, 16, 16))

    def test_degrade_config_hash(self):
        self.assertEqual(self.degrade('a', '--scale', '2')[0], 0)
        self.assertEqual(self.degrade('b', '--scale', '2')[0], 0)
        self.assertEqual(self.degrade('c', '--scale', '4')[0], 0)

        a, b, c = (self.manifest(name) for name in 'abc')
        self.assertEqual(a['config_hash'], b['config_hash'])
        self.assertNotEqual(a['config_hash'], c['config_hash'])
        self.assertEqual(c['config']['scale'], 4)

    def test_degrade_bad_scale(self):
        code, _, err = self.degrade('pairs', '--scale', '3')

        self.assertEqual(code, 1)
        self.assertIn('scale', err)
        self.assertFalse(os.path.exists(self.path('pairs', 'manifest.json')))

    def test_analyze_bands(self):
        code, _, _ = self.run_cli('analyze-bands', '--r', '0.2', '--count',
                                  '5', '--bins', '16', '--out',
                                  self.path('bands', 'hist.csv'))
        self.assertEqual(code, 0)

        rows = read_csv(self.path('bands', 'hist.csv'))
        self.assertEqual(len(rows), 16)
        self.assertEqual(list(rows[0]), list(HISTOGRAM_COLUMNS))

    def test_analyze_model(self):
        code, _, _ = self.run_cli('analyze-layers', '--config', self.config,
                                  '--seed', '2', '--timesteps', '300', '700',
                                  '--samples', '3', '--out',
                                  self.path('curves.csv'))
        self.assertEqual(code, 0)
        self.assertEqual(len(read_csv(self.path('curves.csv'))), 6)

        code, _, _ = self.run_cli('analyze-batch', '--config', self.config,
                                  '--seed', '2', '--band', 'hf', '--samples',
                                  '4', '--out', self.path('sim.csv'))
        self.assertEqual(code, 0)

        matrix = np.loadtxt(self.path('sim.csv'), delimiter=',')
        self.assertEqual(matrix.shape, (4, 4))
        self.assertLessEqual(np.abs(np.diag(matrix) - 1).max(), 1e-6)

        self.assertEqual(self.run_cli('analyze-batch', '--config',
                                      self.config, '--seed', '2', '--layer',
                                      '9', '--out', self.path('x.csv'))[0], 1)

    def test_train_resume(self):
        self.assertEqual(self.train('run')[0], 0)
        code, out, _ = self.train('run', '--steps', '3', '--resume',
                                  self.path('run', 'ckpt-2.json'))

        self.assertEqual(code, 0)
        self.assertIn('step 3', out)
        with open(self.path('run', 'losses.jsonl')) as f:
            steps = [json.loads(line)['step'] for line in f]
        self.assertEqual(steps, [1, 2, 3])

        code, _, err = self.train('run', '--resume',
                                  self.path('run', 'ckpt-3.json'))
        self.assertEqual(code, 1)
        self.assertIn('ckpt-3.json', err)

    def test_sample(self):
        self.assertEqual(self.train('run')[0], 0)
        lr = self.path('a.png')
        write_image(lr, synthetic_image(4, 1))

        code, out, _ = self.run_cli('sample', '--checkpoint',
                                    self.path('run', 'ckpt-2.json'),
                                    '--lr-image', lr, '--out',
                                    self.path('sr'), '--seed', '5',
                                    '--steps', '2')
        self.assertEqual(code, 0)
        self.assertIn('sampled 1 images', out)
        self.assertEqual(os.listdir(self.path('sr')), ['a.png'])
        self.assertEqual(read_image(self.path('sr', 'a.png')).shape,
                         (3, 16, 16))

    def test_sample_directory(self):
        self.assertEqual(self.train('run')[0], 0)
        lr = self.path('lr')
        os.makedirs(lr)
        write_image(os.path.join(lr, 'a.png'), synthetic_image(4, 1))
        write_image(os.path.join(lr, 'b.png'), synthetic_image(4, 2))

        code, _, _ = self.run_cli('sample', '--checkpoint',
                                  self.path('run', 'ckpt-2.json'), '--in', lr,
                                  '--out', self.path('sr'), '--seed', '5',
                                  '--steps', '2')
        self.assertEqual(code, 0)
        self.assertEqual(sorted(os.listdir(self.path('sr'))),
                         ['a.png', 'b.png'])

    def test_sample_inputs(self):
        checkpoint = self.path('run', 'ckpt-2.json')
        self.assertEqual(self.run_cli('sample', '--checkpoint', checkpoint,
                                      '--out', self.path('sr'), '--seed',
                                      '5')[0], 2)
        self.assertEqual(self.run_cli('sample', '--checkpoint', checkpoint,
                                      '--lr-image', self.path('a.png'),
                                      '--in', self.path('lr'), '--out',
                                      self.path('sr'), '--seed', '5')[0], 2)


from framer.cli import main
from framer.spectral import HISTOGRAM_COLUMNS
from framer.analysis import read_csv
from framer.data import ImageDirectory, read_image, write_image, \
    synthetic_image
from framer.harness import load_config
