# coding: utf-8

# framer/loss/_impl/contrastive.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import warnings

import numpy as np


def _warn_zero_norm(count):
    msg = 'Zero-norm feature in cosine similarity, {0} score(s) set to 0'
    logger.warning(msg.format(count))
    warnings.warn(msg.format(count), RuntimeWarning, stacklevel=3)


def _as_rows(x):
    x = x if isinstance(x, Tensor) else Tensor(x)
    return x.reshape(x.shape[0], -1)


def cosine_rows(a, b):
    """Row-wise cosine similarity of ``[B, ...]`` tensors.

       Each row is flattened. A row with zero norm scores 0 and triggers a
       :class:`RuntimeWarning`.
    """
    if tuple(a.shape) != tuple(b.shape):
        raise ShapeException(a.shape, b.shape, 'cosine_sim')

    a, b = _as_rows(a), _as_rows(b)
    dot = (a * b).sum(axis=1)
    a2 = (a * a).sum(axis=1)
    b2 = (b * b).sum(axis=1)

    zero = (a2.data == 0) | (b2.data == 0)
    if zero.any():
        _warn_zero_norm(int(zero.sum()))

    return dot / (a2 * b2 + zero.astype(dot.dtype)).sqrt()


def cosine_matrix(a):
    """Pairwise cosine similarities between the rows of ``a[B, ...]``."""
    a = _as_rows(a)
    a2 = (a * a).sum(axis=1)
    zero = a2.data == 0
    if zero.any():
        _warn_zero_norm(int(zero.sum()))

    b = len(a2.data)
    outer = a2.reshape(b, 1) * a2.reshape(1, b)
    guard = (zero[:, None] | zero[None, :]).astype(a.dtype)

    return matmul(a, a.T) / (outer + guard).sqrt()


def cosine_sim(a, b):
    """Cosine similarity of two features of equal shape.

       ``<a/|a|, b/|b|>`` over all entries; differentiable. Returns 0 with
       a :class:`RuntimeWarning` when either input has zero norm.
    """
    a = a if isinstance(a, Tensor) else Tensor(a)
    b = b if isinstance(b, Tensor) else Tensor(b)
    if a.shape != b.shape:
        raise ShapeException(a.shape, b.shape, 'cosine_sim')

    return cosine_rows(a.reshape(1, -1), b.reshape(1, -1)).reshape(())


def off_diagonal(matrix):
    """Gather ``matrix[b, b']`` for ``b' != b`` into ``[B, B - 1]``."""
    b = matrix.shape[0]
    rows = np.repeat(np.arange(b), b - 1).reshape(b, b - 1)
    cols = np.array([[k for k in range(b) if k != r] for r in range(b)],
                    dtype=np.intp).reshape(b, b - 1)

    return matrix[rows, cols]


def contrastive_rows(positive, negatives, temperature=1.0):
    """Per-row negative log-softmax of the positive score.

       :param positive: scores ``[B]``
       :param negatives: list of ``[B]`` or ``[B, K]`` score tensors
       :rtype: loss tensor ``[B]``, computed with log-sum-exp
    """
    b = positive.shape[0]
    columns = [positive.reshape(b, 1)]
    for scores in negatives:
        if scores.ndim == 1:
            scores = scores.reshape(b, 1)
        if scores.shape[1]:
            columns.append(scores)

    logits = concat(columns, axis=1)
    if temperature != 1.0:
        logits = logits * (1.0 / temperature)

    return logsumexp(logits, axis=1) - logits[:, 0]


def intra_cl(student, teacher, negative, temperature=1.0):
    """Contrastive loss of one feature against the teacher and a layer
       negative, ``-log(e^s+ / (e^s+ + e^s-))``.

       No in-batch negatives take part.
    """
    student, teacher, negative = _single(student, teacher, negative)
    positive = cosine_rows(student, teacher)
    layer = cosine_rows(student, negative)

    return contrastive_rows(positive, [layer], temperature).reshape(())


def inter_cl(student, teacher, negative, batch_negatives=(),
             temperature=1.0):
    """Like :func:`intra_cl` with extra negatives taken from other
       samples, each entering the denominator as ``e^sim(student, x-)``.
    """
    student, teacher, negative = _single(student, teacher, negative)
    positive = cosine_rows(student, teacher)
    scores = [cosine_rows(student, negative)]
    for other in batch_negatives:
        other = other if isinstance(other, Tensor) else Tensor(other)
        if other.shape != student.shape[1:]:
            raise ShapeException(other.shape, student.shape[1:], 'inter_cl')
        scores.append(cosine_rows(student, other.reshape((1,) + other.shape)))

    return contrastive_rows(positive, scores, temperature).reshape(())


def _single(*features):
    features = [f if isinstance(f, Tensor) else Tensor(f) for f in features]
    shapes = [f.shape for f in features]
    for shape in shapes[1:]:
        if shape != shapes[0]:
            raise ShapeException(shapes[0], shape, 'contrastive loss')

    return [f.reshape((1,) + f.shape) for f in features]


from framer.util import ShapeException
from framer.tensor import Tensor, matmul, concat, logsumexp
from framer.loss import logger
