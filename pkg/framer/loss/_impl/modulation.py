# coding: utf-8

# framer/loss/_impl/modulation.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple

import numpy as np


class LayerModulation(namedtuple('LayerModulation',
                                 'i w_lf w_hf a_lf a_hf gated_lf gated_hf '
                                 'delta_lf delta_hf')):

    """Band weights of one student layer, averaged over the batch.

       ``w`` are the energy based weights, ``a`` the alignment gates and
       ``gated == w * a``. ``delta`` is the relative band energy gap to
       the teacher.
    """


def _data(x):
    return np.asarray(x.data if isinstance(x, Tensor) else x,
                      dtype=np.float64)


def batch_faw_weights(students, teachers, masks, eps=None):
    """Per-sample band weights from relative energy differences.

       :param students: array ``[B, C, H, W]``, detached
       :param teachers: array of the same shape
       :rtype: ``(w, delta)`` arrays ``[B, 2]`` ordered ``(lf, hf)``

       ``delta = |E_teacher - E_student| / (E_student + eps)`` and
       ``w = softmax(delta)`` row-wise.
    """
    eps = registry.get('energy_eps', override=eps)
    students, teachers = _data(students), _data(teachers)
    if students.shape != teachers.shape:
        raise ShapeException(students.shape, teachers.shape, 'faw_weights')

    student_energy = np.stack(batch_band_energy(students, masks, eps), axis=1)
    teacher_energy = np.stack(batch_band_energy(teachers, masks, eps), axis=1)
    delta = np.abs(teacher_energy - student_energy) / (student_energy + eps)

    return softmax(Tensor(delta)).data, delta


def faw_weights(student, teacher, masks, eps=None):
    """Band weights of one student/teacher feature pair.

       :rtype: ``(w_lf, w_hf, delta_lf, delta_hf)`` floats, excluded from
         differentiation
    """
    student, teacher = _data(student), _data(teacher)
    weights, delta = batch_faw_weights(student[None], teacher[None], masks,
                                       eps)

    return (float(weights[0, 0]), float(weights[0, 1]),
            float(delta[0, 0]), float(delta[0, 1]))


def gates_from_scores(scores):
    """ReLU of detached cosine scores."""
    return np.maximum(0.0, _data(scores))


def fam_gates(student_bands, teacher_bands):
    """Alignment gates ``max(0, cos)`` of matching band features.

       :param student_bands: ``(lf, hf)`` features of the student layer
       :param teacher_bands: ``(lf, hf)`` features of the teacher
       :rtype: ``(a_lf, a_hf)`` floats, constants during differentiation
    """
    with no_grad():
        return tuple(float(gates_from_scores(cosine_sim(s, t).data))
                     for s, t in zip(student_bands, teacher_bands))


from framer import registry
from framer.util import ShapeException
from framer.tensor import Tensor, softmax, no_grad
from framer.spectral import batch_band_energy
from framer.loss._impl.contrastive import cosine_sim
