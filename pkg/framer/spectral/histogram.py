# coding: utf-8

# framer/spectral/histogram.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from __future__ import with_statement

import csv
from collections import namedtuple

import numpy as np


HISTOGRAM_COLUMNS = ('bin_left', 'bin_right', 'lf_density_mean',
                     'lf_density_std', 'hf_density_mean', 'hf_density_std')


class BandHistogram(namedtuple('BandHistogram', 'edges lf_mean lf_std '
                                                'hf_mean hf_std count')):

    """Band-wise densities of ``log(1 + |F|)`` with shared bin edges.

       ``lf_mean``/``hf_mean`` are densities averaged over the inputs and
       ``*_std`` their standard deviation. Each input density integrates
       to one over the edges.
    """

    @property
    def widths(self):
        return np.diff(self.edges)

    def rows(self):
        for k in range(len(self.edges) - 1):
            yield (self.edges[k], self.edges[k + 1], self.lf_mean[k],
                   self.lf_std[k], self.hf_mean[k], self.hf_std[k])

    def write_csv(self, path):
        with open(path, 'w') as handle:
            writer = csv.writer(handle, lineterminator='\n')
            writer.writerow(HISTOGRAM_COLUMNS)
            for row in self.rows():
                writer.writerow(['{0:.10g}'.format(v) for v in row])

        logger.info('Wrote band histogram to {0}'.format(path))


def _band_values(feature, masks):
    feature = np.asarray(feature, dtype=np.float64)
    if feature.shape[-2:] != masks.shape:
        raise ShapeException(feature.shape[-2:], masks.shape,
                             'band_histogram')

    values = np.log1p(np.abs(fft2(feature)))

    return values[..., masks.lf_fft > 0].ravel(), \
        values[..., masks.hf_fft > 0].ravel()


def _density(values, edges):
    if not values.size:
        return np.zeros(len(edges) - 1)

    counts, _ = np.histogram(values, edges)

    return counts / (float(values.size) * np.diff(edges))


def band_histogram(features, masks, bins=64, clip_percentile=None,
                   edges=None):
    """Histogram band magnitudes of several features on shared bins.

       :param features: iterable of arrays ``[..., H, W]``
       :param masks: :class:`framer.spectral.BandMasks`
       :param bins: number of bins when ``edges`` is not given
       :param clip_percentile: when set, the upper edge is this percentile
         of all values and larger values are clipped into the last bin
       :param edges: explicit shared bin edges
       :rtype: :class:`BandHistogram`
    """
    pairs = [_band_values(f, masks) for f in features]
    if not pairs:
        raise DataException('No features to histogram')

    if edges is None:
        everything = np.concatenate([np.concatenate(p) for p in pairs])
        lo = everything.min()
        hi = (np.percentile(everything, clip_percentile)
              if clip_percentile is not None else everything.max())
        if hi <= lo:
            hi = lo + 1.0
        edges = np.linspace(lo, hi, int(bins) + 1)
    else:
        edges = np.asarray(edges, dtype=np.float64)

    lo, hi = edges[0], edges[-1]
    lf = np.array([_density(np.clip(p[0], lo, hi), edges) for p in pairs])
    hf = np.array([_density(np.clip(p[1], lo, hi), edges) for p in pairs])

    return BandHistogram(edges, lf.mean(axis=0), lf.std(axis=0),
                         hf.mean(axis=0), hf.std(axis=0), len(pairs))


from framer.util import ShapeException, DataException
from framer.spectral import fft2, logger
