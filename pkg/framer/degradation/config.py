# coding: utf-8

# framer/degradation/config.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from dataclasses import dataclass, field

from framer.util import (Section, ConfigException, check_range,
                         check_probability)


BLUR_KINDS = ('iso', 'aniso', 'generalized_iso', 'generalized_aniso',
              'plateau_iso', 'plateau_aniso')


def _check_kernel_size(name, size):
    if size < 3 or size % 2 == 0:
        msg = "'{0}' must be odd and at least 3, got {1}"
        raise ConfigException(msg.format(name, size))


@dataclass
class StageConfig(Section):

    """One blur, resize, noise and compression round.

       ``resize_probs`` are the probabilities of scaling up, down or
       keeping the size; ``resize_range`` bounds the scale factor.
       Noise is Gaussian with probability ``gauss_noise_prob`` and
       Poisson otherwise, applied at all with ``noise_prob``.
    """

    kernel_size: int = 21
    blur_prob: float = 1.0
    blur_sigma: tuple = (0.2, 3.0)
    kernel_types: tuple = BLUR_KINDS
    kernel_probs: tuple = (0.45, 0.25, 0.12, 0.03, 0.12, 0.03)
    betag_range: tuple = (0.5, 4.0)
    betap_range: tuple = (1.0, 2.0)
    sinc_prob: float = 0.1
    resize_probs: tuple = (1 / 3.0, 1 / 3.0, 1 / 3.0)
    resize_range: tuple = (0.15, 1.5)
    noise_prob: float = 1.0
    gauss_noise_prob: float = 0.5
    gauss_sigma: tuple = (1.0, 30.0)
    poisson_scale: tuple = (0.05, 3.0)
    gray_noise_prob: float = 0.4
    jpeg_prob: float = 1.0
    jpeg_quality: tuple = (30, 95)

    def validate(self):
        _check_kernel_size('kernel_size', self.kernel_size)
        for name in ('blur_sigma', 'betag_range', 'betap_range',
                     'resize_range', 'gauss_sigma', 'poisson_scale'):
            check_range(name, getattr(self, name), lower=0)
        check_range('jpeg_quality', self.jpeg_quality, 1, 100)
        for name in ('blur_prob', 'sinc_prob', 'noise_prob',
                     'gauss_noise_prob', 'gray_noise_prob', 'jpeg_prob'):
            check_probability(name, getattr(self, name))

        self.kernel_types = tuple(kernel_kinds.cast(k).name
                                  for k in self.kernel_types)
        if len(self.kernel_types) != len(self.kernel_probs):
            msg = "'kernel_probs' needs {0} entries, got {1}"
            raise ConfigException(msg.format(len(self.kernel_types),
                                             len(self.kernel_probs)))
        for name in ('kernel_probs', 'resize_probs'):
            probs = getattr(self, name)
            for p in probs:
                check_probability(name, p)
            if abs(sum(probs) - 1) > 1e-6:
                msg = "'{0}' must sum to 1, got {1}"
                raise ConfigException(msg.format(name, sum(probs)))
        if len(self.resize_probs) != 3:
            msg = "'resize_probs' needs (up, down, keep), got {0}"
            raise ConfigException(msg.format(self.resize_probs))

        return self


def _second_stage():
    return StageConfig(kernel_size=11, blur_prob=0.8, blur_sigma=(0.2, 1.5),
                       resize_range=(0.3, 1.2), gauss_sigma=(1.0, 25.0),
                       poisson_scale=(0.05, 2.5))


@dataclass
class FinalConfig(Section):

    """Closing sinc filter, downscale and quantization.

       ``resize_mode`` is one of ``area``, ``bilinear``, ``bicubic`` or
       ``random`` (uniform among the three).
    """

    sinc_prob: float = 0.8
    kernel_size: int = 21
    crop: int = 512
    resize_mode: str = 'random'
    upscale_mode: str = 'bicubic'
    quantize: bool = True

    def validate(self):
        check_probability('sinc_prob', self.sinc_prob)
        _check_kernel_size('kernel_size', self.kernel_size)
        if self.crop < 1:
            msg = "'crop' must be positive, got {0}"
            raise ConfigException(msg.format(self.crop))
        if self.resize_mode != 'random':
            self.resize_mode = resize_modes.cast(self.resize_mode).name
        self.upscale_mode = resize_modes.cast(self.upscale_mode).name

        return self


@dataclass
class DegradationConfig(Section):

    """Two stages followed by the final round, at a ``scale`` factor."""

    stage1: StageConfig = field(default_factory=StageConfig)
    stage2: StageConfig = field(default_factory=_second_stage)
    final: FinalConfig = field(default_factory=FinalConfig)
    scale: int = 4

    def validate(self):
        self.stage1.validate()
        self.stage2.validate()
        self.final.validate()
        if self.scale < 1 or self.final.crop % self.scale:
            msg = 'Crop {0} is not divisible by scale {1}'
            raise ConfigException(msg.format(self.final.crop, self.scale))

        return self


def neutral_stage(**overrides):
    """Stage that leaves images unchanged up to compression at quality
       100."""
    values = dict(blur_prob=0.0, sinc_prob=0.0, resize_probs=(0.0, 0.0, 1.0),
                  noise_prob=0.0, jpeg_prob=1.0, jpeg_quality=(100, 100))
    values.update(overrides)

    return StageConfig(**values).validate()


from framer.degradation.enum import kernel_kinds, resize_modes
