# coding: utf-8

# framer/tensor/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Dense arrays with reverse-mode differentiation.

   :class:`Tensor` wraps a :mod:`numpy` array and records the operation
   that produced it. Calling :meth:`Tensor.backward` on a scalar walks the
   recorded :class:`Graph` once in reverse topological order and
   accumulates gradients into leaf tensors created with
   ``requires_grad=True``.

   >>> x = tensor([1., 2.], requires_grad=True)
   >>> loss = (x * x).sum()
   >>> loss.backward()
   >>> x.grad
   array([2., 4.])

   Tensors are not mutated by operations; only ``grad`` of leaves changes
   during :meth:`Tensor.backward`. Independent graphs can be built on
   separate threads, :class:`no_grad` is thread local.
"""

from logging import getLogger
from threading import local

import numpy as np
from six import integer_types


logger = getLogger('framer.tensor')

_grad_state = local()


def grad_enabled():
    """Return ``True`` unless inside :class:`no_grad` on this thread."""
    return getattr(_grad_state, 'enabled', True)


class no_grad(object):

    """Context guard disabling graph recording on the current thread.

       Follows the push - pop paradigm and can be nested.

       >>> with no_grad():
       ...     y = model(x)  # y.requires_grad is False
    """

    def __init__(self):
        self.__state = []

    def push(self):
        """Push state"""
        self.__state.append(grad_enabled())
        _grad_state.enabled = False

    def pop(self):
        """Pop state"""
        _grad_state.enabled = self.__state.pop()

    __enter__ = push

    def __exit__(self, type, value, traceback):  # @ReservedAssignment
        self.pop()


def _as_array(data, dtype=None):
    array = np.asarray(data, dtype=dtype)
    if dtype is None and not np.issubdtype(array.dtype, np.floating):
        array = array.astype(np.float64)

    return array


class Tensor(object):

    """Dense real array participating in a differentiable computation.

       :param data: array like payload, row-major
       :param requires_grad: record operations and accumulate gradients

       Extents are ``shape``; ``grad`` is ``None`` until the first
       backward pass reaching this tensor and afterwards has the same shape
       as ``data``.
    """

    __array_priority__ = 100

    def __init__(self, data, requires_grad=False, op=None,
                 parents=(), backward=None, dtype=None):
        self.data = _as_array(data, dtype)
        self.requires_grad = bool(requires_grad)
        self.grad = None
        self.op = op or 'leaf'
        self._parents = tuple(parents)
        self._backward = backward

    def __repr__(self):
        template = '<Tensor(shape={0},{1}{2}) object at {3}>'
        flag = ',requires_grad' if self.requires_grad else ''
        return template.format(self.shape, self.data.dtype, flag,
                               hex(id(self)))

    @property
    def shape(self):
        return self.data.shape

    @property
    def ndim(self):
        return self.data.ndim

    @property
    def size(self):
        return self.data.size

    @property
    def dtype(self):
        return self.data.dtype

    @property
    def is_leaf(self):
        return self._backward is None

    def numpy(self):
        """Return the underlying array (not a copy)."""
        return self.data

    def item(self):
        if self.size != 1:
            msg = 'item() requires a single element tensor, got {0}'
            raise ShapeException(self.shape, (), msg.format(self.shape))

        return float(self.data.reshape(-1)[0])

    def detach(self):
        """Return a constant sharing data, cut from the graph."""
        return Tensor(self.data, op='detach')

    def zero_grad(self):
        self.grad = np.zeros_like(self.data)

    def backward(self, grad=None):
        """Backpropagate from this tensor.

           :param grad: seed gradient, defaults to ones for scalars

           Gradients accumulate into ``grad`` of every leaf on a path to
           this tensor; recorded leaves that receive none get zeros. A
           tensor outside the recorded graph keeps its ``grad``, ``None``
           when it was never zeroed, which reads as zero.
        """
        graph.backward(self, grad)

    # arithmetic

    def __add__(self, other):
        return elementwise.binary('add', self, other)

    def __radd__(self, other):
        return elementwise.binary('add', other, self)

    def __sub__(self, other):
        return elementwise.binary('sub', self, other)

    def __rsub__(self, other):
        return elementwise.binary('sub', other, self)

    def __mul__(self, other):
        return elementwise.binary('mul', self, other)

    def __rmul__(self, other):
        return elementwise.binary('mul', other, self)

    def __truediv__(self, other):
        return elementwise.binary('div', self, other)

    def __rtruediv__(self, other):
        return elementwise.binary('div', other, self)

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __neg__(self):
        return elementwise.unary('neg', self)

    def __pow__(self, exponent):
        return elementwise.power(self, exponent)

    def __matmul__(self, other):
        return linalg.matmul(self, other)

    def __getitem__(self, index):
        return linalg.getitem(self, index)

    def relu(self):
        return elementwise.unary('relu', self)

    def exp(self):
        return elementwise.unary('exp', self)

    def log(self):
        return elementwise.unary('log', self)

    def sqrt(self):
        return elementwise.unary('sqrt', self)

    def sum(self, axis=None, keepdims=False):
        return linalg.reduce_sum(self, axis, keepdims)

    def mean(self, axis=None, keepdims=False):
        return linalg.reduce_mean(self, axis, keepdims)

    def reshape(self, *shape):
        if len(shape) == 1 and not isinstance(shape[0], integer_types):
            shape = tuple(shape[0])
        return linalg.reshape(self, shape)

    def transpose(self, *axes):
        if len(axes) == 1 and not isinstance(axes[0], integer_types):
            axes = tuple(axes[0])
        return linalg.transpose(self, axes or None)

    @property
    def T(self):
        return linalg.transpose(self, None)


def tensor(data, requires_grad=False, dtype=None):
    """Create leaf :class:`Tensor` from array like data.

       :param data: nested sequences, scalar or ``numpy`` array
       :param requires_grad: whether gradients are accumulated
       :param dtype: numpy floating dtype, float64 unless data is floating
    """
    if isinstance(data, Tensor):
        data = data.data

    return Tensor(np.array(data, dtype=dtype, copy=True)
                  if dtype is not None else _as_array(data).copy(),
                  requires_grad=requires_grad)


def zeros(shape, requires_grad=False, dtype=np.float64):
    return Tensor(np.zeros(shape, dtype=dtype), requires_grad=requires_grad)


def ones(shape, requires_grad=False, dtype=np.float64):
    return Tensor(np.ones(shape, dtype=dtype), requires_grad=requires_grad)


def constant(data, like=None):
    """Wrap data as a constant, adopting the dtype of ``like``."""
    if isinstance(data, Tensor):
        return data

    dtype = like.data.dtype if like is not None else None
    return Tensor(_as_array(data, dtype))


def elementwise_op(op_tag, a, b=None):
    """Apply a registered elementwise operation by tag.

       :param op_tag: one of ``add``, ``sub``, ``mul``, ``div`` (binary) or
         ``neg``, ``relu``, ``exp``, ``log``, ``sqrt`` (unary)

       Binary operands must be broadcastable; mismatches raise
       :class:`framer.util.ShapeException` naming both shapes.
    """
    if op_tag in elementwise.BINARY:
        if b is None:
            msg = "Operation '{0}' requires two operands"
            raise DomainException(msg.format(op_tag))
        return elementwise.binary(op_tag, a, b)

    return elementwise.unary(op_tag, a)


from framer.util import ShapeException, DomainException
from framer.tensor._impl import elementwise, linalg, graph
from framer.tensor._impl.graph import Graph
from framer.tensor._impl.linalg import (matmul, concat, stack, softmax,
                                        logsumexp)
from framer.tensor._impl.conv import conv2d, pad2d, resize_bilinear
from framer.tensor._impl.fourier import spectral_project
from framer.tensor._impl.gradcheck import grad_check, GradCheckReport

__all__ = ['Tensor', 'Graph', 'tensor', 'zeros', 'ones', 'constant',
           'no_grad', 'grad_enabled', 'elementwise_op', 'matmul',
           'concat', 'stack', 'softmax', 'logsumexp',
           'conv2d', 'pad2d', 'resize_bilinear', 'spectral_project',
           'grad_check', 'GradCheckReport']
