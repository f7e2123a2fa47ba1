# coding: utf-8

# framer/tensor/_impl/linalg.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np
from six.moves import range  # @UnresolvedImport


def matmul(a, b):
    """Matrix product of two 2-D tensors.

       Adjoints are ``g @ b.T`` and ``a.T @ g``.
    """
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeException(a.shape, b.shape, 'matmul')

    def backward(g):
        return g @ b.data.T, a.data.T @ g

    return make(a.data @ b.data, 'matmul', (a, b), backward)


def _axes(axis, ndim):
    if axis is None:
        return tuple(range(ndim))
    if isinstance(axis, int):
        axis = (axis,)

    return tuple(sorted(a % ndim for a in axis))


def reduce_sum(x, axis=None, keepdims=False):
    axes = _axes(axis, x.ndim)
    data = x.data.sum(axis=axes, keepdims=keepdims)

    def backward(g):
        if not keepdims:
            g = np.expand_dims(g, axes)
        return (np.broadcast_to(g, x.shape).copy(),)

    return make(data, 'sum', (x,), backward)


def reduce_mean(x, axis=None, keepdims=False):
    axes = _axes(axis, x.ndim)
    count = int(np.prod([x.shape[a] for a in axes]))

    return reduce_sum(x, axes, keepdims) * (1.0 / count)


def reshape(x, shape):
    try:
        data = x.data.reshape(shape)
    except ValueError:
        raise ShapeException(x.shape, shape, 'reshape')

    return make(data, 'reshape', (x,), lambda g: (g.reshape(x.shape),))


def transpose(x, axes=None):
    if axes is None:
        axes = tuple(reversed(range(x.ndim)))
    inverse = tuple(np.argsort(axes))

    return make(x.data.transpose(axes), 'transpose', (x,),
                lambda g: (g.transpose(inverse),))


def getitem(x, index):
    if isinstance(index, Tensor):
        index = index.data.astype(np.intp)

    def backward(g):
        out = np.zeros_like(x.data)
        np.add.at(out, index, g)
        return (out,)

    return make(x.data[index], 'getitem', (x,), backward)


def concat(tensors, axis=0):
    """Join tensors along an existing axis."""
    tensors = [_wrap(t) for t in tensors]
    try:
        data = np.concatenate([t.data for t in tensors], axis=axis)
    except ValueError:
        raise ShapeException(tensors[0].shape, tensors[-1].shape, 'concat')

    bounds = np.cumsum([t.shape[axis] for t in tensors])[:-1]

    def backward(g):
        return tuple(np.split(g, bounds, axis=axis))

    return make(data, 'concat', tuple(tensors), backward)


def stack(tensors, axis=0):
    """Join same-shaped tensors along a new axis."""
    tensors = [_wrap(t) for t in tensors]
    shapes = set(t.shape for t in tensors)
    if len(shapes) > 1:
        first, second = sorted(shapes)[:2]
        raise ShapeException(first, second, 'stack')

    data = np.stack([t.data for t in tensors], axis=axis)

    def backward(g):
        return tuple(np.take(g, k, axis=axis) for k in range(len(tensors)))

    return make(data, 'stack', tuple(tensors), backward)


def _check_finite(x, op_tag):
    if np.any(np.isnan(x.data)):
        msg = '{0} of NaN input'
        raise DomainException(msg.format(op_tag))


def softmax(x, axis=-1):
    """Stable softmax along ``axis``, max-subtracted before exponent."""
    x = _wrap(x)
    _check_finite(x, 'softmax')

    shifted = x.data - x.data.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    y = e / e.sum(axis=axis, keepdims=True)

    def backward(g):
        return (y * (g - (g * y).sum(axis=axis, keepdims=True)),)

    return make(y, 'softmax', (x,), backward)


def logsumexp(x, axis=-1, keepdims=False):
    """Compute ``log(sum(exp(x)))`` along ``axis`` without overflow.

       Gradient is the softmax of ``x``, which is why contrastive losses
       written as negative log-softmax need no ``log`` guard.
    """
    x = _wrap(x)
    _check_finite(x, 'logsumexp')

    m = x.data.max(axis=axis, keepdims=True)
    s = np.exp(x.data - m).sum(axis=axis, keepdims=True)
    out = np.log(s) + m
    weights = np.exp(x.data - out)
    data = out if keepdims else np.squeeze(out, axis=axis)

    def backward(g):
        if not keepdims:
            g = np.expand_dims(g, axis)
        return (g * weights,)

    return make(data, 'logsumexp', (x,), backward)


def _wrap(x):
    return x if isinstance(x, Tensor) else Tensor(x)


from framer.util import ShapeException, DomainException
from framer.tensor import Tensor
from framer.tensor._impl.elementwise import make
