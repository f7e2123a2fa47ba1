# coding: utf-8

# framer/analysis/similarity.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np


def cross_sample_matrix(features, masks, band):
    """Cosine similarity of one band between every pair of samples.

       :param features: one layer's features ``[B, ...]`` with ``B >= 2``
       :param band: ``lf`` or ``hf``
       :rtype: symmetric ``[B, B]`` array
    """
    features = getattr(features, 'data', features)
    features = np.asarray(features, dtype=np.float64)
    if features.ndim < 3 or len(features) < 2:
        msg = 'Cross-sample similarity needs at least 2 samples, got {0}'
        raise DataException(msg.format(len(features) if features.ndim
                                       else 0))

    lf, hf = band_arrays(features, masks)
    selected = lf if bands.cast(band) == bands.lf else hf
    matrix = cosine_matrix(selected).data

    return (matrix + matrix.T) / 2.0


def mean_off_diagonal(matrix):
    matrix = np.asarray(matrix)
    mask = ~np.eye(len(matrix), dtype=bool)

    return float(matrix[mask].mean())


from framer.util import DataException
from framer.spectral import band_arrays, bands
from framer.loss import cosine_matrix
