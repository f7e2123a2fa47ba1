# coding: utf-8

# framer/diffusion/schedule.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from dataclasses import dataclass
import math

import numpy as np

from framer.util import Section, ConfigException


@dataclass
class ScheduleConfig(Section):
    kind: str = 'linear'
    steps: int = 1000
    beta_start: float = 1e-4
    beta_end: float = 0.02

    def validate(self):
        self.kind = schedules.cast(self.kind).name
        if self.steps < 1:
            msg = "'steps' must be positive, got {0}"
            raise ConfigException(msg.format(self.steps))
        if not 0 < self.beta_start < self.beta_end < 1:
            msg = 'Betas must satisfy 0 < start < end < 1, got {0}, {1}'
            raise ConfigException(msg.format(self.beta_start, self.beta_end))

        return self


def _cosine_betas(steps, offset=0.008):
    f = np.cos((np.arange(steps + 1) / steps + offset) / (1 + offset) *
               math.pi / 2) ** 2
    bars = f / f[0]

    return np.clip(1 - bars[1:] / bars[:-1], 0, 0.999)


class NoiseSchedule(object):

    """Variances of the forward process for ``t`` in ``1..T``.

       ``alpha_bar(0)`` is 1 so that ``t = 0`` denotes the clean image.
    """

    def __init__(self, betas):
        betas = np.asarray(betas, dtype=np.float64)
        if betas.ndim != 1 or not ((betas > 0) & (betas < 1)).all():
            raise DomainException('Betas must lie in (0, 1)')

        self.betas = betas
        self.alphas = 1.0 - betas
        self.alpha_bars = np.cumprod(self.alphas)
        for array in (self.betas, self.alphas, self.alpha_bars):
            array.flags.writeable = False

    @classmethod
    def linear(cls, steps=1000, beta_start=1e-4, beta_end=0.02):
        return cls(np.linspace(beta_start, beta_end, steps))

    @classmethod
    def cosine(cls, steps=1000):
        return cls(_cosine_betas(steps))

    @classmethod
    def from_config(cls, config):
        if config.kind == 'cosine':
            return cls.cosine(config.steps)

        return cls.linear(config.steps, config.beta_start, config.beta_end)

    @property
    def T(self):
        return len(self.betas)

    def __len__(self):
        return len(self.betas)

    def check(self, t):
        t = np.asarray(t)
        if t.size and (t.min() < 1 or t.max() > self.T or
                       not np.issubdtype(t.dtype, np.integer)):
            msg = 'Timestep out of range [1, {0}]: {1}'
            raise DomainException(msg.format(self.T, t))

        return t

    def alpha_bar(self, t):
        """``alpha_bar`` at integer ``t`` in ``0..T`` (scalar or array)."""
        t = np.asarray(t)
        if t.size and (t.min() < 0 or t.max() > self.T):
            msg = 'Timestep out of range [0, {0}]: {1}'
            raise DomainException(msg.format(self.T, t))

        padded = np.concatenate([[1.0], self.alpha_bars])
        return padded[t]

    def sample_timesteps(self, count, rng):
        """Uniform timesteps in ``1..T``."""
        return rng.integers(1, self.T + 1, size=count)


from framer.util import DomainException
from framer.diffusion.enum import schedules
