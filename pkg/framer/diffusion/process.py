# coding: utf-8

# framer/diffusion/process.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np


def _per_sample(values, ndim):
    values = np.asarray(values, dtype=np.float64)
    if values.ndim == 0:
        return values

    return values.reshape((-1,) + (1,) * (ndim - 1))


def q_sample(z0, t, noise, schedule):
    """Noisy image ``sqrt(ab_t) z0 + sqrt(1 - ab_t) noise``.

       :param z0: clean images ``[B, ...]``
       :param t: timestep in ``1..T`` or one per sample
       :param noise: standard normal array of the shape of ``z0``
       :param schedule: :class:`NoiseSchedule`
    """
    z0 = np.asarray(z0, dtype=np.float64)
    noise = np.asarray(noise, dtype=np.float64)
    if z0.shape != noise.shape:
        raise ShapeException(z0.shape, noise.shape, 'q_sample')

    bar = _per_sample(schedule.alpha_bar(schedule.check(t)), z0.ndim)

    return np.sqrt(bar) * z0 + np.sqrt(1.0 - bar) * noise


def noise_loss(eps_pred, noise):
    """Mean squared error of the predicted noise, differentiable in
       ``eps_pred``."""
    eps_pred = eps_pred if isinstance(eps_pred, Tensor) else Tensor(eps_pred)
    noise = noise.data if isinstance(noise, Tensor) else noise
    noise = np.asarray(noise, dtype=eps_pred.dtype)
    if eps_pred.shape != noise.shape:
        raise ShapeException(eps_pred.shape, noise.shape, 'noise_loss')

    return ((eps_pred - noise) ** 2).mean()


from framer.util import ShapeException
from framer.tensor import Tensor
