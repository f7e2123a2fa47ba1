# coding: utf-8

# framer/diffusion/sampler.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np


def timestep_sequence(T, steps):
    """``steps`` evenly spaced timesteps from ``T`` down to 1."""
    if not 1 <= steps <= T:
        msg = 'Sampling steps must lie in [1, {0}], got {1}'
        raise DomainException(msg.format(T, steps))

    return np.round(np.linspace(T, 1, steps)).astype(int)


def _condition(lr_cond, size, mode='bicubic'):
    lr_cond = np.asarray(lr_cond, dtype=np.float64)
    if lr_cond.shape[2:] == (size, size):
        return lr_cond

    return np.stack([resize(image, (size, size), mode) for image in lr_cond])


def ddim_step(z, eps, bar, bar_prev, eta, rng):
    """Generalized update from ``alpha_bar = bar`` to ``bar_prev``.

       ``eta = 0`` is deterministic, ``eta = 1`` the ancestral update.
       ``rng`` is only consumed when the step injects noise.
    """
    x0 = (z - np.sqrt(1.0 - bar) * eps) / np.sqrt(bar)
    sigma = 0.0
    if eta and bar_prev < 1.0:
        sigma = eta * np.sqrt((1.0 - bar_prev) / (1.0 - bar) *
                              (1.0 - bar / bar_prev))

    out = np.sqrt(bar_prev) * x0 + \
        np.sqrt(max(1.0 - bar_prev - sigma ** 2, 0.0)) * eps
    if sigma > 0:
        out = out + sigma * rng.standard_normal(z.shape)

    return out


def sample(model, lr_cond, c, schedule, steps, seed, method='ddpm',
           eta=None, size=None, channels=None):
    """Generate high resolution images conditioned on ``lr_cond``.

       :param model: callable ``model(z_t, t, lr, c, taps=False)``
         returning ``(eps, taps)``
       :param lr_cond: low resolution images ``[B, C, h, w]``, resized
         to the target size before sampling
       :param schedule: :class:`NoiseSchedule`
       :param steps: number of model evaluations, at most ``T``
       :param method: ``ddpm`` (ancestral) or ``ddim``
       :param eta: noise scale, defaults to 1 for ``ddpm`` and 0 for
         ``ddim``
       :param size: target extent, defaults to ``model.config.image_size``
       :rtype: ``numpy`` array ``[B, C, size, size]``

       The initial noise is the first draw of a generator seeded with
       ``seed``; ancestral noise follows step by step.
    """
    method = samplers.cast(method)
    if eta is None:
        eta = 1.0 if method == samplers.ddpm else 0.0
    if size is None:
        size = model.config.image_size

    lr_cond = _condition(lr_cond, size)
    channels = channels or lr_cond.shape[1]
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((lr_cond.shape[0], channels, size, size))

    ts = timestep_sequence(schedule.T, steps)
    logger.debug('Sampling {0} steps with {1}, eta {2}'.format(
        len(ts), method, eta))

    with no_grad():
        for k, t in enumerate(ts):
            eps, _ = model(z, int(t), lr_cond, c, taps=False)
            eps = eps.data if isinstance(eps, Tensor) else np.asarray(eps)
            bar = float(schedule.alpha_bar(t))
            bar_prev = float(schedule.alpha_bar(ts[k + 1])) \
                if k + 1 < len(ts) else 1.0
            z = ddim_step(z, eps, bar, bar_prev, eta, rng)

    return z


from framer.util import DomainException
from framer.tensor import Tensor, no_grad
from framer.degradation import resize
from framer.diffusion import logger
from framer.diffusion.enum import samplers
