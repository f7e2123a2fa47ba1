# coding: utf-8

# framer/spectral/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Radial low/high frequency band decomposition of feature maps.

   Masks are defined on the DC-centred spectrum: a bin belongs to the low
   frequency band when its distance from the centre bin ``(H//2, W//2)``
   divided by the half-diagonal ``sqrt((H/2)**2 + (W/2)**2)`` is at most
   the radius fraction ``r``. Every other bin is high frequency.

   Multi-channel features are transformed per channel; energies and
   similarities are taken over the flattened all-channel representation.
   Band similarity is measured on spatial reconstructions, which by
   Parseval equals the similarity of the masked spectra.
"""

from collections import namedtuple
from logging import getLogger

import numpy as np

from framer import registry
from framer.util import memoized, ShapeException, DomainException
from framer.lazyenum import enum
from framer.tensor import spectral_project


logger = getLogger('framer.spectral')

bands = enum('band', ('lf', 'hf'))


def fft2(x):
    """Unnormalized 2-D DFT over the two trailing axes."""
    return np.fft.fft2(np.asarray(x), axes=(-2, -1))


def ifft2(spectrum):
    """Inverse of :func:`fft2` scaled by ``1/(H*W)``."""
    return np.fft.ifft2(spectrum, axes=(-2, -1))


class BandMasks(object):

    """Paired binary masks on the centred ``[H, W]`` spectrum.

       ``m_lf + m_hf == 1`` everywhere. :attr:`lf_fft` and :attr:`hf_fft`
       hold the same masks in unshifted FFT order. All arrays are read
       only, instances are shared through a cache.
    """

    def __init__(self, height, width, radius, m_lf, m_hf):
        self.height = height
        self.width = width
        self.radius = radius
        self.m_lf = _readonly(m_lf)
        self.m_hf = _readonly(m_hf)
        self.lf_fft = _readonly(np.fft.ifftshift(m_lf))
        self.hf_fft = _readonly(np.fft.ifftshift(m_hf))

    def __repr__(self):
        template = '<BandMasks({0}x{1},r={2},lf={3}) object at {4}>'
        return template.format(self.height, self.width, self.radius,
                               int(self.m_lf.sum()), hex(id(self)))

    @property
    def shape(self):
        return (self.height, self.width)

    def band(self, name):
        """Return the unshifted mask of band ``lf`` or ``hf``."""
        return self.lf_fft if bands.cast(name) == bands.lf else self.hf_fft


def _readonly(array):
    array = np.array(array, dtype=np.float64)
    array.flags.writeable = False
    return array


@memoized
def _build_masks(height, width, radius):
    logger.debug('Building band masks {0}x{1} r={2}'.format(height, width,
                                                            radius))

    ky = np.arange(height) - height // 2
    kx = np.arange(width) - width // 2
    distance = np.sqrt(ky[:, None] ** 2 + kx[None, :] ** 2)
    half_diagonal = np.sqrt((height / 2.0) ** 2 + (width / 2.0) ** 2)

    m_lf = (distance / half_diagonal <= radius).astype(np.float64)
    m_hf = 1.0 - m_lf

    return BandMasks(height, width, radius, m_lf, m_hf)


def make_band_masks(height, width, radius=None):
    """Build (cached) radial masks for a ``height x width`` spectrum.

       :param radius: fraction of the half-diagonal in ``(0, 1)``, defaults
         to ``registry.band_radius``
       :rtype: :class:`BandMasks`
    """
    radius = float(registry.get('band_radius', override=radius))
    if not 0 < radius < 1:
        msg = 'Band radius must lie in (0, 1), got {0}'
        raise DomainException(msg.format(radius))
    if height < 1 or width < 1:
        msg = 'Invalid spectrum extent'
        raise ShapeException((height, width), (1, 1), msg)

    return _build_masks(int(height), int(width), radius)


def _check(feature, masks, operation):
    if np.shape(feature)[-2:] != masks.shape:
        raise ShapeException(np.shape(feature)[-2:], masks.shape, operation)


class BandPair(namedtuple('BandPair', 'spectrum lf_spectrum hf_spectrum '
                                      'lf hf magnitude')):

    """Band split of a feature.

       Spectra are in unshifted FFT order; ``lf`` and ``hf`` are real
       spatial reconstructions, ``magnitude`` is ``|spectrum|``.
    """


def decompose(feature, masks):
    """Split ``feature[..., H, W]`` into low and high frequency bands."""
    feature = np.asarray(feature, dtype=np.float64)
    _check(feature, masks, 'decompose')

    spectrum = fft2(feature)
    lf_spectrum = spectrum * masks.lf_fft
    hf_spectrum = spectrum * masks.hf_fft

    return BandPair(spectrum, lf_spectrum, hf_spectrum,
                    np.real(ifft2(lf_spectrum)), np.real(ifft2(hf_spectrum)),
                    np.abs(spectrum))


def band_energy(feature, masks, eps=None):
    """Mean spectral magnitude inside each band.

       ``E = sum(|F| * M) / (C * sum(M) + eps)`` where ``C`` counts the
       leading (channel) entries of ``feature``.

       :rtype: ``(E_lf, E_hf)`` floats
    """
    eps = registry.get('energy_eps', override=eps)
    feature = np.asarray(feature, dtype=np.float64)
    _check(feature, masks, 'band_energy')

    magnitude = np.abs(fft2(feature))
    lead = int(np.prod(feature.shape[:-2])) if feature.ndim > 2 else 1

    energies = []
    for mask in (masks.lf_fft, masks.hf_fft):
        total = (magnitude * mask).sum()
        energies.append(float(total / (lead * mask.sum() + eps)))

    return tuple(energies)


def batch_band_energy(features, masks, eps=None):
    """:func:`band_energy` of every sample in ``features[B, ..., H, W]``.

       :rtype: ``(E_lf, E_hf)`` arrays of length ``B``
    """
    eps = registry.get('energy_eps', override=eps)
    features = np.asarray(features, dtype=np.float64)
    _check(features, masks, 'batch_band_energy')

    magnitude = np.abs(fft2(features))
    magnitude = magnitude.reshape((len(features), -1) + masks.shape)
    lead = magnitude.shape[1]

    return tuple((magnitude * mask).sum(axis=(1, 2, 3)) /
                 (lead * mask.sum() + eps)
                 for mask in (masks.lf_fft, masks.hf_fft))


def band_log_magnitude(feature, masks):
    """Mean of ``log(1 + |F|)`` over the bins of each band."""
    feature = np.asarray(feature, dtype=np.float64)
    _check(feature, masks, 'band_log_magnitude')

    values = np.log1p(np.abs(fft2(feature)))
    result = []
    for mask in (masks.lf_fft, masks.hf_fft):
        selected = values[..., mask > 0]
        result.append(float(selected.mean()) if selected.size else 0.0)

    return tuple(result)


def band_filter(x, masks, band):
    """Differentiable band reconstruction of tensor ``x[..., H, W]``.

       The high band is computed as ``x - lf`` which equals the masked
       reconstruction up to rounding.
    """
    _check(x.data, masks, 'band_filter')
    band = bands.cast(band)
    lf = spectral_project(x, masks.lf_fft)

    return lf if band == bands.lf else x - lf


def split_bands(x, masks):
    """Return ``(lf, hf)`` tensors for ``x``."""
    _check(x.data, masks, 'split_bands')
    lf = spectral_project(x, masks.lf_fft)

    return lf, x - lf


def band_arrays(x, masks):
    """Non differentiable ``(lf, hf)`` reconstructions of an array."""
    x = np.asarray(x, dtype=np.float64)
    _check(x, masks, 'band_arrays')
    lf = np.real(ifft2(fft2(x) * masks.lf_fft))

    return lf, x - lf


from framer.spectral.histogram import (HISTOGRAM_COLUMNS, BandHistogram,
                                      band_histogram)

__all__ = ['fft2', 'ifft2', 'BandMasks', 'BandPair', 'make_band_masks',
           'decompose', 'band_energy', 'batch_band_energy',
           'band_log_magnitude', 'band_filter',
           'split_bands', 'band_arrays', 'bands', 'HISTOGRAM_COLUMNS',
           'BandHistogram', 'band_histogram']
