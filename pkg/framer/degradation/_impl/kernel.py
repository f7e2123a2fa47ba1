# coding: utf-8

# framer/degradation/_impl/kernel.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import math

import numpy as np
from scipy import special


def mesh_grid(size):
    """Offsets from the kernel center, ``[size, size, 2]`` as ``(x, y)``."""
    ax = np.arange(size) - (size - 1) / 2.0
    xx, yy = np.meshgrid(ax, ax)

    return np.stack([xx, yy], axis=-1)


def sigma_matrix(sigma_x, sigma_y, theta):
    """Covariance of a Gaussian with axes rotated by ``theta``."""
    d = np.diag([sigma_x ** 2, sigma_y ** 2])
    u = np.array([[math.cos(theta), -math.sin(theta)],
                  [math.sin(theta), math.cos(theta)]])

    return u.dot(d).dot(u.T)


def _quadratic(size, sigma_x, sigma_y, theta):
    grid = mesh_grid(size)
    inverse = np.linalg.inv(sigma_matrix(sigma_x, sigma_y, theta))

    return np.sum(grid.dot(inverse) * grid, axis=-1)


def circular_lowpass(size, cutoff):
    """Windowless 2-D sinc ``cutoff * J1(cutoff r) / (2 pi r)``."""
    r = np.sqrt(np.sum(mesh_grid(size) ** 2, axis=-1))
    center = (size - 1) // 2
    r[center, center] = 1.0
    kernel = cutoff * special.j1(cutoff * r) / (2 * math.pi * r)
    kernel[center, center] = cutoff ** 2 / (4 * math.pi)

    return kernel


def build_kernel(kind, size, sigma=1.0, theta=0.0, beta=1.0, cutoff=None):
    """Blur kernel normalized to sum 1.

       :param kind: one of :data:`framer.degradation.enum.kernel_kinds`
       :param size: odd extent
       :param sigma: ``sigma_x`` or ``(sigma_x, sigma_y)``; isotropic
         kinds use ``sigma_x`` only
       :param theta: rotation of anisotropic kinds in radians
       :param beta: shape exponent of ``generalized`` and ``plateau``
         kinds
       :param cutoff: angular cutoff of the ``sinc`` kind
    """
    kind = kernel_kinds.cast(kind)
    if size < 1 or size % 2 == 0:
        msg = 'Kernel size must be odd and positive, got {0}'
        raise DomainException(msg.format(size))

    if kind == kernel_kinds.sinc:
        if cutoff is None:
            raise DomainException('sinc kernel requires a cutoff')
        kernel = circular_lowpass(size, cutoff)
        return kernel / kernel.sum()

    sigma_x, sigma_y = (sigma, sigma) if np.isscalar(sigma) else sigma
    if kind.name.endswith('iso') and not kind.name.endswith('aniso'):
        sigma_y, theta = sigma_x, 0.0

    q = _quadratic(size, sigma_x, sigma_y, theta)
    if kind.name.startswith('generalized'):
        kernel = np.exp(-0.5 * q ** beta)
    elif kind.name.startswith('plateau'):
        kernel = 1.0 / (q ** beta + 1.0)
    else:
        kernel = np.exp(-0.5 * q)

    return kernel / kernel.sum()


def _odd_size(limit, rng):
    lo = min(7, limit)
    return int(rng.choice(np.arange(lo, limit + 1, 2)))


def sinc_cutoff(size, rng):
    lo = math.pi / 3 if size < 13 else math.pi / 5
    return rng.uniform(lo, math.pi)


def random_kernel(stage, rng):
    """Draw a blur kernel for ``stage``.

       Consumes ``rng`` in the order: size, sinc decision, then either the
       cutoff or the kind, ``sigma_x``, ``sigma_y`` and rotation for
       anisotropic kinds and the shape exponent for generalized and
       plateau kinds.
    """
    size = _odd_size(stage.kernel_size, rng)
    if rng.uniform() < stage.sinc_prob:
        return build_kernel('sinc', size, cutoff=sinc_cutoff(size, rng))

    kind = stage.kernel_types[int(rng.choice(len(stage.kernel_types),
                                             p=stage.kernel_probs))]
    if kind == 'sinc':
        return build_kernel('sinc', size, cutoff=sinc_cutoff(size, rng))

    sigma_x = rng.uniform(*stage.blur_sigma)
    sigma_y, theta = sigma_x, 0.0
    if kind.endswith('aniso'):
        sigma_y = rng.uniform(*stage.blur_sigma)
        theta = rng.uniform(-math.pi, math.pi)

    beta = 1.0
    if kind.startswith('generalized'):
        beta = rng.uniform(*stage.betag_range)
    elif kind.startswith('plateau'):
        beta = rng.uniform(*stage.betap_range)
    return build_kernel(kind, size, (sigma_x, sigma_y), theta, beta)


from framer.util import DomainException
from framer.degradation.enum import kernel_kinds
