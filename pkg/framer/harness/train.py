# coding: utf-8

# framer/harness/train.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from __future__ import with_statement

from collections import namedtuple, OrderedDict
from glob import glob
import json
import os

import numpy as np


#: offset of the seed of the held out evaluation images
EVAL_SEED_OFFSET = 1000003


def to_model(img):
    """Map images from ``[0, 1]`` to the ``[-1, 1]`` model range."""
    return 2.0 * np.asarray(img) - 1.0


def from_model(z):
    return np.clip((np.asarray(z) + 1.0) / 2.0, 0.0, 1.0)


class RunResult(namedtuple('RunResult', 'output losses checkpoints curves '
                                        'metrics')):

    """Artifacts of :func:`train`.

       ``losses`` holds the per step loss dictionaries written to
       ``losses.jsonl``, ``checkpoints`` the retained manifest paths.
    """

    @property
    def final(self):
        return self.losses[-1]


class Trainer(object):

    """One model, its adapters and optimizer under a :class:`TrainConfig`.

       Every step draws its randomness from the seed sequence
       ``[seed, step]``, so a step does not depend on how earlier batches
       were prepared.
    """

    def __init__(self, config, images=None):
        self.config = config
        self.model = build_backbone(config.backbone, seed=config.seed)
        self.adapters = Adapters(self.model.tap_shapes(),
                                 seed=config.seed + 1)
        self.schedule = NoiseSchedule.from_config(config.schedule)
        size = config.backbone.image_size
        self.masks = make_band_masks(size, size, config.loss.radius)

        params = self.model.parameters()
        if config.loss.use_framer:
            params = params + self.adapters.parameters()
        self.optimizer = Adam(params, config.lr, config.betas,
                              config.adam_eps)

        if images is None:
            images = open_source(config.data, config.data_count, size,
                                 config.seed)
        self.batches = BatchSource(images, config.degradation,
                                   config.batch_size, config.seed)
        self.step_count = 0

    def _generators(self, step):
        sequence = np.random.SeedSequence([self.config.seed, step, 1])
        return [np.random.default_rng(s) for s in sequence.spawn(2)]

    def losses(self, batch, step):
        """Loss breakdown of ``batch`` without updating parameters."""
        diffusion_rng, loss_rng = self._generators(step)
        z0 = to_model(batch.hr)
        lr_cond = to_model(batch.lr_resized)

        t = self.schedule.sample_timesteps(len(z0), diffusion_rng)
        noise = diffusion_rng.standard_normal(z0.shape)
        z_t = q_sample(z0, t, noise, self.schedule)

        loss_config = self.config.loss
        eps, taps = self.model(z_t, t, lr_cond, taps=loss_config.use_framer)
        noise_term = noise_loss(eps, noise)

        if not loss_config.use_framer:
            return total_loss(noise_term)

        features = self.adapters(taps)
        framer_losses, records, _ = framer_objective(
            features, loss_config, self.masks, loss_rng)

        return total_loss(noise_term, framer_losses, records)

    def step(self, batch):
        """Run one optimizer step on ``batch``, return its breakdown."""
        self.step_count = batch.step
        breakdown = self.losses(batch, batch.step)

        self.optimizer.zero_grad()
        breakdown.tensor.backward()
        self.optimizer.step()
        self.check_finite()

        return breakdown

    def state_dict(self):
        state = OrderedDict(self.model.state_dict())
        state.update(self.adapters.state_dict())

        return state

    def load_state_dict(self, arrays):
        self.model.load_state_dict(arrays)
        self.adapters.load_state_dict(arrays)

    def save(self, directory):
        """Write ``ckpt-<step>`` with parameters and optimizer moments."""
        prefix = os.path.join(directory, 'ckpt-{0}'.format(self.step_count))
        meta = {'step': self.step_count, 'config': self.config.to_dict(),
                'adam_t': self.optimizer.t}
        state = self.state_dict()
        state.update(self.optimizer.state_dict())

        return save_checkpoint(prefix, state, meta)

    def resume(self, path):
        """Load parameters and optimizer moments from a checkpoint.

           :rtype: the step the checkpoint was written at
        """
        arrays, meta = load_checkpoint(path)
        self.load_state_dict(arrays)
        if 'adam_t' in meta:
            self.optimizer.load_state_dict(arrays, meta['adam_t'])
        self.step_count = meta.get('step', 0)
        logger.info('Resumed from {0} at step {1}'.format(path,
                                                          self.step_count))

        return self.step_count

    def check_finite(self):
        """Raise :class:`DomainException` on a non-finite parameter."""
        params = list(self.model.params) + list(self.adapters.params)
        for name, p in params:
            if not np.isfinite(p.data).all():
                msg = 'Parameter {0} is not finite after step {1}'
                raise DomainException(msg.format(name, self.step_count))


def _prune(directory, keep):
    manifests = glob(os.path.join(directory, 'ckpt-*.json'))
    manifests.sort(key=lambda p: int(os.path.basename(p)[5:-5]))

    for manifest in manifests[:-keep]:
        os.remove(manifest)
        payload = manifest[:-5] + '.bin'
        if os.path.exists(payload):
            os.remove(payload)

    return manifests[-keep:]


def evaluation_pairs(config, count=None):
    """Held out degraded pairs ``(hr, lr_resized)`` as model inputs."""
    count = count or config.eval_samples
    size = config.backbone.image_size
    seed = config.seed + EVAL_SEED_OFFSET
    images = SyntheticSource(count, size, seed)
    pairs = make_pairs([images[k] for k in range(count)], config.degradation,
                       seed)

    return np.stack([p.hr for p in pairs]), \
        np.stack([p.lr_resized for p in pairs])


def evaluate(trainer, output=None):
    """Layer curves and sampled image metrics of a trained model.

       :rtype: ``(curves, metrics)`` lists of rows
    """
    config = trainer.config
    hr, lr_resized = evaluation_pairs(config)
    adapters = trainer.adapters if trainer.adapters.layers else None

    curves = layer_curves(trainer.model, (to_model(hr), to_model(lr_resized)),
                          config.eval_timesteps, masks=trainer.masks,
                          adapters=adapters, schedule=trainer.schedule,
                          seed=config.seed)

    metrics = []
    count = min(config.metric_samples, len(hr))
    if count:
        out = sample(trainer.model, to_model(lr_resized[:count]), None,
                     trainer.schedule, config.sample_steps, config.seed,
                     config.sample_method)
        metrics = image_metrics(from_model(out), hr[:count])

    if output:
        write_layer_curves(os.path.join(output, 'layer_curves.csv'), curves)
        write_metrics(os.path.join(output, 'metrics.csv'), metrics)

    return curves, metrics


def train(config, images=None, evaluation=True, resume=None):
    """Train a model under ``config`` and write the run artifacts.

       :param images: optional indexable image source replacing
         ``config.data``
       :param evaluation: compute ``layer_curves.csv`` and ``metrics.csv``
         after the last step
       :param resume: checkpoint manifest to continue from; steps up to
         its step are skipped and ``losses.jsonl`` is appended to
       :rtype: :class:`RunResult`

       A non-finite loss or parameter stops training with
       :class:`TrainingException` naming the last checkpoint written.
    """
    output = config.output
    if not os.path.isdir(output):
        os.makedirs(output)
    dump_config(config, os.path.join(output, 'config.yaml'))

    trainer = Trainer(config, images)
    first, mode, checkpoint = 1, 'w', None
    if resume:
        first, mode, checkpoint = trainer.resume(resume) + 1, 'a', resume
        if first > config.steps:
            msg = 'Checkpoint {0} is past the last of {1} steps'
            raise ConfigException(msg.format(resume, config.steps))
    logger.info('Training {0} steps, {1} parameters, output {2}'.format(
        config.steps, sum(p.size for p in trainer.model.parameters()),
        output))

    losses, checkpoints = [], []
    steps = range(first, config.steps + 1)
    with open(os.path.join(output, 'losses.jsonl'), mode) as log:
        with Prefetcher(trainer.batches, steps, config.prefetch) as batches:
            for batch in batches:
                try:
                    breakdown = trainer.step(batch)
                except DomainException as e:
                    msg = 'Step {0}: {1}'
                    raise TrainingException(msg.format(batch.step, e),
                                            batch.step, checkpoint)

                record = breakdown.to_dict(batch.step)
                losses.append(record)
                log.write(json.dumps(record, sort_keys=True) + '\n')

                if batch.step % config.log_every == 0:
                    msg = 'Step {0}: noise {1:.6f}, total {2:.6f}'
                    logger.info(msg.format(batch.step, breakdown.noise,
                                           breakdown.total))

                if batch.step % config.checkpoint_every == 0 or \
                        batch.step == config.steps:
                    checkpoint = trainer.save(output)
                    checkpoints = _prune(output, config.keep_checkpoints)

    curves, metrics = [], []
    if evaluation:
        curves, metrics = evaluate(trainer, output)

    return RunResult(output, losses, checkpoints, curves, metrics)


def restore(path):
    """Rebuild a :class:`Trainer` from a checkpoint manifest.

       The trainer draws batches from a one image placeholder; pass the
       checkpoint to :func:`train` as ``resume`` to continue on the
       configured data.
    """
    arrays, meta = load_checkpoint(path)
    if 'config' not in meta:
        msg = 'Checkpoint {0} carries no configuration'
        raise DataException(msg.format(path))

    config = TrainConfig.from_dict(meta['config'])
    trainer = Trainer(config, images=SyntheticSource(1, config.
                                                     backbone.image_size))
    trainer.resume(path)

    return trainer


from framer.util import (DomainException, TrainingException, DataException,
                         ConfigException)
from framer.spectral import make_band_masks
from framer.loss import framer_objective, total_loss
from framer.backbone import (build_backbone, Adapters, save_checkpoint,
                             load_checkpoint)
from framer.degradation import make_pairs
from framer.diffusion import NoiseSchedule, q_sample, noise_loss, sample
from framer.analysis import layer_curves, image_metrics, write_layer_curves, \
    write_metrics
from framer.data import SyntheticSource, BatchSource, Prefetcher, open_source
from framer.harness import logger
from framer.harness.config import TrainConfig, dump_config
from framer.harness.optim import Adam
