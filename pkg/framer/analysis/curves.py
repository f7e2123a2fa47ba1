# coding: utf-8

# framer/analysis/curves.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple

import numpy as np


class CurveRow(namedtuple('CurveRow', 't depth cos_lf cos_hf')):

    """Band cosines of one layer against the teacher at timestep ``t``."""

    def to_dict(self):
        return self._asdict()


def band_feature_cosines(student, teacher, masks):
    """Batch-averaged cosines of the ``(lf, hf)`` bands of two features.

       :param student: array ``[B, C, H, W]`` already adapted to the
         shape of ``teacher``
       :rtype: ``(cos_lf, cos_hf)`` floats
    """
    student = np.asarray(student, dtype=np.float64)
    teacher = np.asarray(teacher, dtype=np.float64)
    if student.shape != teacher.shape:
        raise ShapeException(student.shape, teacher.shape,
                             'band_feature_cosines')

    result = []
    for s, t in zip(band_arrays(student, masks), band_arrays(teacher, masks)):
        result.append(float(cosine_rows(s, t).data.mean()))

    return tuple(result)


def _unpack(batch):
    try:
        z0, lr_cond = batch
    except (TypeError, ValueError):
        z0, lr_cond = batch.hr, batch.lr_resized

    return np.asarray(z0, dtype=np.float64), \
        np.asarray(lr_cond, dtype=np.float64)


def layer_cosine_curve(model, batch, t, masks=None, adapters=None,
                       schedule=None, seed=0, c=None):
    """Cosine of every layer's bands against the final layer.

       The clean batch is noised to timestep ``t`` with noise drawn from
       ``seed``, passed through ``model`` and each tap is adapted to the
       teacher shape before its bands are compared.

       :param batch: pair ``(z0, lr_cond)`` of ``[B, C, S, S]`` arrays or
         an object with ``hr`` and ``lr_resized``
       :param masks: defaults to masks of the teacher extent
       :param adapters: :class:`framer.backbone.Adapters` for models with
         taps of differing shape
       :rtype: list of :class:`CurveRow` ordered by depth
    """
    z0, lr_cond = _unpack(batch)
    schedule = schedule or NoiseSchedule.linear()
    noise = np.random.default_rng(seed).standard_normal(z0.shape)
    z_t = q_sample(z0, t, noise, schedule)

    with no_grad():
        _, taps = model(z_t, int(t), lr_cond, c, taps=True)
        if not taps:
            raise DataException('Model produced no feature taps')

        target = tuple(taps[-1].feature.shape[1:])
        features = [adapt_tap(tap, target, adapters).data for tap in taps]

    teacher = features[-1]
    if masks is None:
        masks = make_band_masks(*teacher.shape[-2:])

    rows = []
    for tap, feature in zip(taps, features):
        cos_lf, cos_hf = band_feature_cosines(feature, teacher, masks)
        rows.append(CurveRow(int(t), float(tap.depth), cos_lf, cos_hf))

    logger.debug('Layer curve at t={0} over {1} layers'.format(t, len(rows)))

    return rows


def layer_curves(model, batch, timesteps, **kw):
    """:func:`layer_cosine_curve` for several timesteps, concatenated."""
    rows = []
    for t in timesteps:
        rows.extend(layer_cosine_curve(model, batch, t, **kw))

    return rows


def mid_layer_mean(rows, band='hf', lower=0.4, upper=0.8):
    """Mean cosine of ``band`` over rows with depth in ``[lower, upper]``.

       Returns ``nan`` when no layer falls inside the window.
    """
    key = 'cos_' + bands.cast(band).name
    values = [getattr(r, key) for r in rows if lower <= r.depth <= upper]

    return float(np.mean(values)) if values else float('nan')


from framer.util import ShapeException, DataException
from framer.tensor import no_grad
from framer.spectral import make_band_masks, band_arrays, bands
from framer.loss import cosine_rows
from framer.backbone import adapt_tap
from framer.diffusion import NoiseSchedule, q_sample
from framer.analysis import logger
