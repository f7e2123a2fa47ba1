# coding: utf-8

# framer/cli.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Command line front end, installed as the ``framer`` console script.

   Subcommands that draw random numbers require ``--seed``. Failures of
   the library exit with status 1, usage errors with status 2.
"""

from __future__ import print_function

import argparse
import hashlib
import json
import os
import sys

import numpy as np


def _config_options(parser):
    parser.add_argument('--config', help='YAML configuration file')
    parser.add_argument('--set', action='append', default=[],
                        metavar='KEY=VALUE', dest='overrides',
                        help='override a dotted configuration key')


def _seed_option(parser, required=True):
    parser.add_argument('--seed', type=int, required=required,
                        default=None if required else 0,
                        help='seed of every random draw')


def _model_options(parser):
    _config_options(parser)
    parser.add_argument('--checkpoint', help='checkpoint manifest, an '
                        'untrained model is built from --config otherwise')


def build_parser():
    parser = argparse.ArgumentParser(prog='framer', description=(
        'Frequency aligned self-distillation for diffusion super '
        'resolution'))
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log progress to stderr')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('train', help='train a model')
    _config_options(p)
    _seed_option(p)
    p.add_argument('--steps', type=int)
    p.add_argument('--output')
    p.add_argument('--data', help='directory of training images')
    p.add_argument('--resume', metavar='CHECKPOINT',
                   help='continue from a checkpoint manifest')
    p.set_defaults(run=run_train)

    p = commands.add_parser('degrade', help='write degraded pairs')
    _config_options(p)
    _seed_option(p)
    p.add_argument('--scale', type=int, help='downscale factor, '
                   'degradation.scale otherwise')
    p.add_argument('--in', dest='source', help='image file or directory, '
                   'synthetic images otherwise')
    p.add_argument('--count', type=int, default=8,
                   help='number of synthetic images')
    p.add_argument('--out', required=True, help='output directory')
    p.set_defaults(run=run_degrade)

    p = commands.add_parser('sample', help='super resolve images')
    _seed_option(p)
    p.add_argument('--checkpoint', required=True)
    inputs = p.add_mutually_exclusive_group(required=True)
    inputs.add_argument('--lr-image', metavar='PATH',
                        help='low resolution image file')
    inputs.add_argument('--in', dest='source',
                        help='directory of low resolution images')
    p.add_argument('--out', required=True, help='output directory')
    p.add_argument('--steps', type=int)
    p.add_argument('--method', choices=('ddpm', 'ddim'))
    p.set_defaults(run=run_sample)

    p = commands.add_parser('analyze-layers',
                            help='layer-wise band cosine curves')
    _model_options(p)
    _seed_option(p)
    p.add_argument('--timesteps', type=int, nargs='+')
    p.add_argument('--samples', type=int)
    p.add_argument('--out', required=True, help='CSV path')
    p.set_defaults(run=run_analyze_layers)

    p = commands.add_parser('analyze-bands',
                            help='band magnitude densities of images')
    _config_options(p)
    _seed_option(p, required=False)
    p.add_argument('--in', dest='source', help='image directory, '
                   'synthetic images otherwise')
    p.add_argument('--r', dest='radius', type=float, default=0.2)
    p.add_argument('--bins', type=int, default=64)
    p.add_argument('--count', type=int, default=100)
    p.add_argument('--degraded', action='store_true',
                   help='histogram degraded inputs instead')
    p.add_argument('--out', required=True, help='CSV path')
    p.set_defaults(run=run_analyze_bands)

    p = commands.add_parser('analyze-batch',
                            help='cross-sample band similarity matrix')
    _model_options(p)
    _seed_option(p)
    p.add_argument('--layer', type=int, help='1-based layer, default '
                   'middle')
    p.add_argument('--band', choices=('lf', 'hf'), default='lf')
    p.add_argument('--t', type=int, default=300)
    p.add_argument('--samples', type=int, default=8)
    p.add_argument('--out', required=True, help='CSV path')
    p.set_defaults(run=run_analyze_batch)

    p = commands.add_parser('metrics', help='PSNR and SSIM of image pairs')
    p.add_argument('--pred', required=True, help='directory of outputs')
    p.add_argument('--ref', required=True, help='directory of references')
    p.add_argument('--peak', type=float, default=1.0,
                   help='1 for unit range, 255 for 8 bit values')
    p.add_argument('--out', required=True, help='CSV path')
    p.set_defaults(run=run_metrics)

    p = commands.add_parser('ablate', help='train ablation variants')
    _config_options(p)
    _seed_option(p)
    p.add_argument('--table', default='adaptive',
                   choices=tuple(TABLES) + ('all',))
    p.add_argument('--steps', type=int)
    p.add_argument('--output')
    p.set_defaults(run=run_ablate)

    return parser


def _load(args, **values):
    values = dict((k, v) for k, v in values.items() if v is not None)
    if getattr(args, 'seed', None) is not None:
        values['seed'] = args.seed

    return load_config(args.config, args.overrides, values)


def _trainer(args):
    if getattr(args, 'checkpoint', None):
        return restore(args.checkpoint)

    return Trainer(_load(args))


def _parent(path):
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory):
        os.makedirs(directory)

    return path


def _directory(path):
    if not os.path.isdir(path):
        os.makedirs(path)

    return path


def run_train(args):
    config = _load(args, steps=args.steps, output=args.output, data=args.data)
    result = train(config, resume=args.resume)

    final = result.final
    print('step {0} noise {1:.6f} total {2:.6f} -> {3}'.format(
        final['step'], final['noise'], final['total'], result.output))


def _sources(args, size):
    if not args.source:
        images = SyntheticSource(args.count, size, args.seed)
        return [('synthetic-{0}'.format(k), images[k])
                for k in range(len(images))]

    if os.path.isfile(args.source):
        return [(os.path.splitext(os.path.basename(args.source))[0],
                 read_image(args.source))]

    images = ImageDirectory(args.source)
    return [(os.path.splitext(name)[0], images[k])
            for k, name in enumerate(images.names)]


def degradation_config(args):
    """The ``degradation`` section alone, with ``--scale`` applied."""
    data = load_mapping(args.config, args.overrides)
    values = data.get('degradation') or {}
    if not isinstance(values, dict):
        raise ConfigException("Configuration key 'degradation' expects a "
                              "mapping")
    if args.scale is not None:
        values = merge(values, {'scale': args.scale})

    return DegradationConfig.from_dict(values, 'degradation.')


def run_degrade(args):
    config = degradation_config(args)
    named = _sources(args, config.final.crop)
    out = _directory(args.out)

    pairs = make_pairs([img for _, img in named], config, args.seed)
    entries = []
    for (name, _), pair in zip(named, pairs):
        entry = {'name': name}
        for suffix in ('hr', 'lr', 'lr_resized'):
            entry[suffix] = '{0}_{1}.png'.format(name, suffix)
            write_image(os.path.join(out, entry[suffix]),
                        getattr(pair, suffix))
        entries.append(entry)

    settings = config.to_dict()
    digest = hashlib.sha256(json.dumps(settings, sort_keys=True).encode())
    manifest = {'seed': args.seed, 'config': settings,
                'config_hash': digest.hexdigest(), 'pairs': entries}
    with open(os.path.join(out, 'manifest.json'), 'w') as f:
        json.dump(manifest, f, indent=2, sort_keys=True)

    print('wrote {0} pairs to {1}'.format(len(pairs), out))


def run_sample(args):
    trainer = restore(args.checkpoint)
    config = trainer.config
    if args.lr_image:
        named = [(os.path.basename(args.lr_image), read_image(args.lr_image))]
    else:
        images = ImageDirectory(args.source)
        named = [(name, images[k]) for k, name in enumerate(images.names)]
    out = _directory(args.out)
    steps = args.steps or config.sample_steps
    method = args.method or config.sample_method

    seeds = sample_seeds(args.seed, len(named))
    for (name, img), seed in zip(named, seeds):
        z = sample(trainer.model, to_model(img[None]), None,
                   trainer.schedule, steps, seed, method)
        write_image(os.path.join(out, name), from_model(z[0]))

    print('sampled {0} images into {1}'.format(len(named), out))


def run_analyze_layers(args):
    trainer = _trainer(args)
    config = trainer.config
    timesteps = args.timesteps or config.eval_timesteps
    hr, lr_resized = evaluation_pairs(config, args.samples)
    adapters = trainer.adapters if trainer.adapters.layers else None

    rows = layer_curves(trainer.model, (to_model(hr), to_model(lr_resized)),
                        timesteps, masks=trainer.masks, adapters=adapters,
                        schedule=trainer.schedule, seed=args.seed)
    write_layer_curves(_parent(args.out), rows)


def _center_crop(img, size):
    h, w = img.shape[1:]
    top, left = (h - size) // 2, (w - size) // 2

    return img[:, top:top + size, left:left + size]


def run_analyze_bands(args):
    config = _load(args)
    if args.source:
        images = ImageDirectory(args.source)
        images = [images[k] for k in range(len(images))]
    else:
        size = config.degradation.final.crop
        source = SyntheticSource(args.count, size, args.seed)
        images = [source[k] for k in range(len(source))]

    if args.degraded:
        images = [p.lr_resized for p in make_pairs(images, config.degradation,
                                                   args.seed)]

    size = min(min(img.shape[1:]) for img in images)
    images = [_center_crop(img, size) for img in images]
    masks = make_band_masks(size, size, args.radius)

    band_histogram(images, masks, args.bins).write_csv(_parent(args.out))


def run_analyze_batch(args):
    trainer = _trainer(args)
    config = trainer.config
    n = config.backbone.n_layers
    layer = args.layer or (n + 1) // 2
    if not 1 <= layer <= n:
        msg = 'Layer {0} outside [1, {1}]'
        raise DomainException(msg.format(layer, n))

    hr, lr_resized = evaluation_pairs(config, args.samples)
    noise = np.random.default_rng(args.seed).standard_normal(hr.shape)
    z_t = q_sample(to_model(hr), args.t, noise, trainer.schedule)

    with no_grad():
        _, taps = trainer.model(z_t, args.t, to_model(lr_resized), None,
                                taps=True)
        target = tuple(taps[-1].feature.shape[1:])
        adapters = trainer.adapters if trainer.adapters.layers else None
        feature = adapt_tap(taps[layer - 1], target, adapters).data

    matrix = cross_sample_matrix(feature, trainer.masks, args.band)
    write_matrix(_parent(args.out), matrix)


def run_metrics(args):
    pred = ImageDirectory(args.pred)
    ref = ImageDirectory(args.ref)
    missing = sorted(set(pred.names) - set(ref.names))
    if missing:
        msg = 'No reference for {0}'
        raise DataException(msg.format(', '.join(missing)))

    scale = args.peak if args.peak > 1 else 1.0
    by_name = dict((name, k) for k, name in enumerate(ref.names))
    outputs = [pred[k] * scale for k in range(len(pred))]
    targets = [ref[by_name[name]] * scale for name in pred.names]

    rows = image_metrics(outputs, targets, args.peak, ids=pred.names)
    write_metrics(_parent(args.out), rows)


def run_ablate(args):
    config = _load(args, steps=args.steps, output=args.output)
    rows = run_ablation_suite(config, args.table)

    for row in rows:
        print('{0:18s} noise {1:.6f} hf {2:.4f} lf {3:.4f}'.format(
            row.variant, row.noise_loss, row.mid_cos_hf, row.mid_cos_lf))


def main(argv=None):
    """Run the command line, return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code or 0

    if args.verbose:
        basicConfig(level=INFO, format='%(asctime)s %(name)-12s %(message)s')

    try:
        args.run(args)
    except FramerException as e:
        logger.error('{0}: {1}'.format(e.__class__.__name__, e))
        print('framer: error: {0}'.format(e), file=sys.stderr)
        return 1

    return 0


from logging import basicConfig, INFO

from framer import __version__, logger
from framer.util import (FramerException, DomainException, DataException,
                         ConfigException)
from framer.tensor import no_grad
from framer.spectral import make_band_masks, band_histogram
from framer.backbone import adapt_tap
from framer.degradation import DegradationConfig, make_pairs, sample_seeds
from framer.diffusion import q_sample, sample
from framer.analysis import (layer_curves, cross_sample_matrix,
                             image_metrics, write_layer_curves, write_matrix,
                             write_metrics)
from framer.data import SyntheticSource, ImageDirectory, read_image, \
    write_image
from framer.harness import (Trainer, train, restore, evaluation_pairs,
                            run_ablation_suite, to_model, from_model, TABLES,
                            load_config, load_mapping, merge)


if __name__ == '__main__':
    sys.exit(main())
