# coding: utf-8

# framer/loss/_impl/objective.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple

import numpy as np
from six.moves import range  # @UnresolvedImport


class NegativeDraw(namedtuple('NegativeDraw', 'i j state')):

    """Layer negative ``j`` drawn for student layer ``i``.

       ``state`` is the generator state before the draw so the choice can
       be replayed.
    """


def draw_negative_layer(i, n, rng, teacher=None):
    """Draw ``j`` uniformly from ``{1..n} \\ {i, teacher}``.

       :param teacher: teacher layer index, defaults to ``n``
       :param rng: :class:`numpy.random.Generator`
    """
    if n < 3:
        raise DomainException('insufficient layers for random-layer negative')

    teacher = n if teacher is None else teacher
    candidates = [k for k in range(1, n + 1) if k not in (i, teacher)]
    state = rng.bit_generator.state
    j = candidates[int(rng.integers(len(candidates)))]

    return NegativeDraw(i, j, state)


def resolve_teacher(config, n, rng):
    """Return the 1-based teacher layer for an ``n`` layer backbone."""
    teacher = teachers.cast(config.teacher)
    if teacher == teachers.random:
        if n < 3:
            raise DomainException('insufficient layers for random teacher')
        return int(rng.integers(2, n))

    offset = {'final': 0, 'final_1': 1, 'final_2': 2}[teacher.name]
    if n - offset < 2:
        msg = 'Teacher {0} leaves no student layer in {1} layers'
        raise DomainException(msg.format(teacher, n))

    return n - offset


def _negative(i, n, teacher, config, rng):
    if negatives.cast(config.negative) == negatives.previous_layer and i > 1:
        return NegativeDraw(i, i - 1, None)

    return draw_negative_layer(i, n, rng, teacher)


class LayerRecord(namedtuple('LayerRecord', 'i intra inter modulation '
                                            'framer')):

    """Loss values of one student layer.

       ``intra`` holds the low band loss and ``inter`` the high band loss
       (their contrastive kinds follow the configuration). ``framer`` is the
       gated weighted sum.
    """

    def to_dict(self):
        m = self.modulation
        return {'i': self.i, 'intra': self.intra, 'inter': self.inter,
                'w_lf': m.w_lf, 'w_hf': m.w_hf, 'a_lf': m.a_lf,
                'a_hf': m.a_hf, 'framer': self.framer}


def _rows(x):
    return x.reshape(x.shape[0], -1)


def _band_loss(kind, objective, student, teacher, negative, positive,
               temperature):
    kind = band_losses.cast(kind)
    if kind == band_losses.none:
        return None

    if objective == objectives.mse_freq:
        return ((_rows(student) - _rows(teacher)) ** 2).mean(axis=1)

    scores = [cosine_rows(student, negative)]
    if kind == band_losses.inter and student.shape[0] > 1:
        scores.append(off_diagonal(cosine_matrix(student)))

    return contrastive_rows(positive, scores, temperature)


def layer_framer_loss(student, teacher, negative, config, masks, i=None,
                      negative_hf=None, frozen=None):
    """Self-distillation loss of one student layer.

       :param student: adapted student features ``[B, C, H, W]``
       :param teacher: teacher features of the same shape
       :param negative: per-sample layer negatives of the same shape
       :param config: :class:`framer.loss.config.LossConfig`
       :param masks: :class:`framer.spectral.BandMasks` for ``(H, W)``
       :param negative_hf: separate negatives for the high band
       :param frozen: optional mapping from layer index to the band
         coefficients ``(weights, gates)``, each ``[B, 2]``. Entries found
         are reused, missing ones are stored after computing them, which
         holds the detached coefficients fixed across repeated calls.
       :rtype: ``(framer_i, LayerRecord)``

       Samples are weighted individually and the weighted losses averaged
       over the batch. In-batch negatives of the ``inter`` kind are the
       same layer features of the other samples.
    """
    if student.shape != teacher.shape or student.shape != negative.shape:
        raise ShapeException(student.shape, teacher.shape,
                             'layer_framer_loss')

    if config.detach_teacher:
        teacher = teacher.detach()

    b = student.shape[0]
    objective = objectives.cast(config.objective)

    if objective == objectives.mse:
        value = ((_rows(student) - _rows(teacher)) ** 2).mean(axis=1)
        half = np.full(b, 0.5)
        framer = (value * half + value * half).mean()
        v = float(value.data.mean())
        modulation = LayerModulation(i, 0.5, 0.5, 1.0, 1.0, 0.5, 0.5,
                                     0.0, 0.0)
        return framer, LayerRecord(i, v, v, modulation, framer.item())

    s_lf, s_hf = split_bands(student, masks)
    t_lf, t_hf = split_bands(teacher, masks)
    n_lf = band_filter(negative, masks, 'lf')
    n_hf = band_filter(negative if negative_hf is None else negative_hf,
                       masks, 'hf')

    pos_lf = cosine_rows(s_lf, t_lf)
    pos_hf = cosine_rows(s_hf, t_hf)

    if config.use_faw:
        weights, delta = batch_faw_weights(student.data, teacher.data, masks)
    else:
        weights, delta = np.full((b, 2), 0.5), np.zeros((b, 2))

    if config.use_fam:
        gates = np.stack([gates_from_scores(pos_lf),
                          gates_from_scores(pos_hf)], axis=1)
    else:
        gates = np.ones((b, 2))

    if frozen is not None:
        weights, gates = frozen.setdefault(i, (weights, gates))

    gated = weights * gates

    losses = [_band_loss(config.lf_loss, objective, s_lf, t_lf, n_lf, pos_lf,
                         config.temperature),
              _band_loss(config.hf_loss, objective, s_hf, t_hf, n_hf, pos_hf,
                         config.temperature)]

    framer = None
    for k, loss in enumerate(losses):
        if loss is None:
            continue
        term = loss * gated[:, k].astype(loss.dtype)
        framer = term if framer is None else framer + term

    if framer is None:
        framer = (_rows(student) * 0.0).sum(axis=1)
    framer = framer.mean()

    values = [float(loss.data.mean()) if loss is not None else 0.0
              for loss in losses]
    mean = gated.mean(axis=0)
    modulation = LayerModulation(
        i, float(weights[:, 0].mean()), float(weights[:, 1].mean()),
        float(gates[:, 0].mean()), float(gates[:, 1].mean()),
        float(mean[0]), float(mean[1]),
        float(delta[:, 0].mean()), float(delta[:, 1].mean()))

    return framer, LayerRecord(i, values[0], values[1], modulation,
                               framer.item())


def _gather(features, draws):
    """Stack sample ``b`` of layer ``draws[b].j`` for every sample."""
    picks = set(d.j for d in draws)
    if len(picks) == 1:
        return features[draws[0].j - 1]

    return stack([features[d.j - 1][b] for b, d in enumerate(draws)])


def framer_objective(features, config, masks, rng, frozen=None):
    """Self-distillation losses of every student layer.

       :param features: adapted tap features, layer ``k`` at position
         ``k - 1``, all of shape ``[B, C, H, W]``
       :param rng: generator dedicated to teacher and negative draws;
         consumed teacher first, then per layer in ascending order and per
         sample
       :param frozen: band coefficient store passed on to
         :func:`layer_framer_loss`
       :rtype: ``(losses, records, teacher)``
    """
    n = len(features)
    shapes = set(f.shape for f in features)
    if len(shapes) > 1:
        first, second = sorted(shapes)[:2]
        raise ShapeException(first, second, 'framer_objective')

    teacher_index = resolve_teacher(config, n, rng)
    teacher = features[teacher_index - 1]
    b = teacher.shape[0]

    losses, records = [], []
    for i in range(1, teacher_index):
        draws = [_negative(i, n, teacher_index, config, rng)
                 for _ in range(b)]
        negative = _gather(features, draws)

        negative_hf = None
        if config.redraw_per_branch:
            redraws = [_negative(i, n, teacher_index, config, rng)
                       for _ in range(b)]
            negative_hf = _gather(features, redraws)

        loss, record = layer_framer_loss(features[i - 1], teacher, negative,
                                         config, masks, i, negative_hf,
                                         frozen)
        losses.append(loss)
        records.append(record)

    return losses, records, teacher_index


class LossBreakdown(namedtuple('LossBreakdown', 'layers noise total '
                                                'tensor')):

    """Decomposition of the training objective of one step.

       ``total == noise + sum(framer of layers)``; ``tensor`` is the
       differentiable total.
    """

    def to_dict(self, step=None):
        result = {'noise': self.noise,
                  'per_layer': [r.to_dict() for r in self.layers],
                  'total': self.total}
        if step is not None:
            result = dict(step=step, **result)

        return result


def total_loss(noise_loss, framer_losses=(), records=None):
    """Sum the noise objective and per-layer self-distillation losses.

       :param noise_loss: scalar tensor or float
       :param framer_losses: scalar tensors or floats, one per layer
       :param records: optional :class:`LayerRecord` list naming the layers
       :rtype: :class:`LossBreakdown`
    """
    noise = noise_loss if isinstance(noise_loss, Tensor) else \
        Tensor(np.float64(noise_loss))
    framer_losses = list(framer_losses)
    records = list(records) if records is not None else [None] * len(
        framer_losses)

    if not np.isfinite(noise.data).all():
        raise DomainException('Non-finite noise loss')

    total = noise
    for k, loss in enumerate(framer_losses):
        loss = loss if isinstance(loss, Tensor) else Tensor(np.float64(loss))
        if not np.isfinite(loss.data).all():
            layer = records[k].i if records[k] is not None else k + 1
            msg = 'Non-finite self-distillation loss at layer {0}'
            raise DomainException(msg.format(layer))
        total = total + loss

    layers = [r for r in records if r is not None]

    return LossBreakdown(layers, noise.item(), total.item(), total)


from framer.util import ShapeException, DomainException
from framer.tensor import Tensor, stack
from framer.spectral import split_bands, band_filter
from framer.loss.enum import band_losses, objectives, teachers, negatives
from framer.loss._impl.contrastive import (cosine_rows, cosine_matrix,
                                           off_diagonal, contrastive_rows)
from framer.loss._impl.modulation import (LayerModulation, batch_faw_weights,
                                          gates_from_scores)
