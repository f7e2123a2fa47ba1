# coding: utf-8

# framer/analysis/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Diagnostics of trained and untrained denoisers.

   Layer-wise band cosine curves against the final layer, cross-sample
   similarity matrices and the full-reference metrics PSNR and SSIM.
   Results are plain rows that :mod:`framer.analysis.output` writes as
   CSV.
"""

from logging import getLogger


logger = getLogger('framer.analysis')


from framer.analysis.curves import (CurveRow, layer_cosine_curve,
                                    layer_curves, band_feature_cosines,
                                    mid_layer_mean)
from framer.analysis.similarity import (cross_sample_matrix,
                                        mean_off_diagonal)
from framer.analysis.metrics import MetricRow, psnr, ssim, image_metrics
from framer.analysis.output import (CURVE_COLUMNS, METRIC_COLUMNS,
                                    write_layer_curves, write_matrix,
                                    write_metrics, write_rows, read_csv)

__all__ = ['CurveRow', 'layer_cosine_curve', 'layer_curves',
           'band_feature_cosines', 'mid_layer_mean', 'cross_sample_matrix',
           'mean_off_diagonal', 'MetricRow', 'psnr', 'ssim',
           'image_metrics', 'CURVE_COLUMNS', 'METRIC_COLUMNS',
           'write_layer_curves', 'write_matrix', 'write_metrics', 'write_rows',
           'read_csv']
