# coding: utf-8

# framer/loss/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Frequency aligned self-distillation losses.

   The final backbone layer (or a configured teacher layer) supervises each
   intermediate layer separately in a low and a high frequency band. Each
   band contributes a contrastive term whose positive is the teacher
   feature and whose negatives are another layer of the same image and,
   for the ``inter`` kind, the same layer of the other samples in the
   batch::

       loss_i = w~_lf * L_lf + w~_hf * L_hf,   w~ = w * a

   ``w`` is a softmax over relative band energy gaps to the teacher and
   ``a`` is the ReLU of the band cosine. Both are computed from detached
   data and enter the loss as constant coefficients.

   >>> losses, records, teacher = framer_objective(features, config, masks,
   ...                                             rng)
   >>> breakdown = total_loss(noise, losses, records)
   >>> breakdown.tensor.backward()
"""

from logging import getLogger


logger = getLogger('framer.loss')


from framer.loss.config import LossConfig
from framer.loss.enum import band_losses, objectives, teachers, negatives
from framer.loss._impl.contrastive import (cosine_sim, cosine_rows,
                                           cosine_matrix, intra_cl, inter_cl,
                                           contrastive_rows)
from framer.loss._impl.modulation import (LayerModulation, faw_weights,
                                          batch_faw_weights, fam_gates)
from framer.loss._impl.objective import (NegativeDraw, draw_negative_layer,
                                         resolve_teacher, LayerRecord,
                                         layer_framer_loss, framer_objective,
                                         LossBreakdown, total_loss)

__all__ = ['LossConfig', 'band_losses', 'objectives', 'teachers',
           'negatives', 'cosine_sim', 'cosine_rows', 'cosine_matrix',
           'intra_cl', 'inter_cl', 'contrastive_rows', 'LayerModulation',
           'faw_weights', 'batch_faw_weights', 'fam_gates', 'NegativeDraw',
           'draw_negative_layer', 'resolve_teacher', 'LayerRecord',
           'layer_framer_loss', 'framer_objective', 'LossBreakdown',
           'total_loss']
