# coding: utf-8

# framer/harness/config.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from __future__ import with_statement

from dataclasses import dataclass, field

import yaml

from framer.util import Section, ConfigException
from framer.backbone import BackboneConfig
from framer.diffusion import ScheduleConfig
from framer.degradation import DegradationConfig
from framer.loss import LossConfig


def _degradation():
    return DegradationConfig.from_dict({'final': {'crop': 32}})


@dataclass
class TrainConfig(Section):

    """Everything a training run depends on.

       ``degradation.final.crop`` is the high resolution extent and has to
       match ``backbone.image_size``. ``data`` names a directory of
       images; without it ``data_count`` synthetic images are used.
    """

    backbone: BackboneConfig = field(default_factory=BackboneConfig)
    schedule: ScheduleConfig = field(default_factory=ScheduleConfig)
    degradation: DegradationConfig = field(default_factory=_degradation)
    loss: LossConfig = field(default_factory=LossConfig)
    seed: int = 0
    steps: int = 200
    batch_size: int = 4
    lr: float = 1e-3
    betas: tuple = (0.9, 0.999)
    adam_eps: float = 1e-8
    output: str = 'runs/framer'
    data: str = ''
    data_count: int = 256
    prefetch: int = 2
    log_every: int = 10
    checkpoint_every: int = 50
    keep_checkpoints: int = 2
    eval_timesteps: tuple = (300, 700)
    eval_samples: int = 100
    metric_samples: int = 8
    sample_steps: int = 20
    sample_method: str = 'ddim'

    def validate(self):
        for name in ('steps', 'batch_size', 'data_count', 'log_every',
                     'checkpoint_every', 'keep_checkpoints', 'eval_samples',
                     'sample_steps'):
            if getattr(self, name) < 1:
                msg = "'{0}' must be positive, got {1}"
                raise ConfigException(msg.format(name, getattr(self, name)))

        if self.metric_samples < 0 or self.prefetch < 0:
            raise ConfigException("'metric_samples' and 'prefetch' must not "
                                  "be negative")
        if not self.lr > 0 or not self.adam_eps > 0:
            msg = 'Learning rate and epsilon must be positive, got {0}, {1}'
            raise ConfigException(msg.format(self.lr, self.adam_eps))
        if len(self.betas) != 2 or not all(0 <= b < 1 for b in self.betas):
            msg = "'betas' must be two values in [0, 1), got {0}"
            raise ConfigException(msg.format(self.betas))

        if self.degradation.final.crop != self.backbone.image_size:
            msg = 'Crop size {0} differs from backbone image size {1}'
            raise ConfigException(msg.format(self.degradation.final.crop,
                                             self.backbone.image_size))

        offset = {'final_1': 1, 'final_2': 2}.get(self.loss.teacher, 0)
        if self.backbone.n_layers - offset < 2:
            msg = "Teacher '{0}' leaves no student layer in {1} layers"
            raise ConfigException(msg.format(self.loss.teacher,
                                             self.backbone.n_layers))

        for t in self.eval_timesteps:
            if not 1 <= t <= self.schedule.steps:
                msg = 'Evaluation timestep {0} outside [1, {1}]'
                raise ConfigException(msg.format(t, self.schedule.steps))
        if self.sample_steps > self.schedule.steps:
            msg = "'sample_steps' {0} exceeds {1} schedule steps"
            raise ConfigException(msg.format(self.sample_steps,
                                             self.schedule.steps))
        self.sample_method = samplers.cast(self.sample_method).name

        return self


def parse_override(text):
    """Split ``dotted.key=value`` into a nested mapping.

       The value is parsed as YAML so numbers, booleans and lists keep
       their type.

       >>> parse_override('loss.use_fam=false')
       {'loss': {'use_fam': False}}
    """
    key, sep, value = text.partition('=')
    if not sep or not key.strip():
        msg = "Override '{0}' is not of the form key=value"
        raise ConfigException(msg.format(text))

    try:
        value = yaml.safe_load(value)
    except yaml.YAMLError as e:
        msg = "Override '{0}' has an invalid value: {1}"
        raise ConfigException(msg.format(text, e))

    result = value
    for part in reversed(key.strip().split('.')):
        result = {part: result}

    return result


def merge(base, extra):
    """Recursively merge mapping ``extra`` into a copy of ``base``."""
    result = dict(base)
    for key, value in extra.items():
        current = result.get(key)
        if isinstance(current, dict) and isinstance(value, dict):
            value = merge(current, value)
        result[key] = value

    return result


def load_mapping(path=None, overrides=(), values=None):
    """Nested mapping of a YAML file with ``values`` and overrides merged.

       :param path: YAML file nested by section, optional
       :param overrides: ``dotted.key=value`` strings applied in order
       :param values: mapping applied after the file, before overrides
    """
    data = {}
    if path:
        try:
            with open(path) as f:
                data = yaml.safe_load(f) or {}
        except (IOError, OSError, yaml.YAMLError) as e:
            msg = 'Cannot read configuration {0}: {1}'
            raise ConfigException(msg.format(path, e))
        if not isinstance(data, dict):
            msg = 'Configuration {0} is not a mapping'
            raise ConfigException(msg.format(path))

    data = merge(data, values or {})
    for text in overrides:
        data = merge(data, parse_override(text))

    return data


def load_config(path=None, overrides=(), values=None):
    """Build a :class:`TrainConfig` from a YAML file and overrides.

       Arguments are those of :func:`load_mapping`.
    """
    config = TrainConfig.from_dict(load_mapping(path, overrides, values))
    logger.debug('Loaded configuration from {0}'.format(path or 'defaults'))

    return config


def dump_config(config, path):
    """Write the resolved configuration as YAML."""
    with open(path, 'w') as f:
        yaml.safe_dump(config.to_dict(), f, default_flow_style=False)

    return path


from framer.diffusion import samplers
from framer.harness import logger
