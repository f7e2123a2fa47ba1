# coding: utf-8

# framer/tensor/_impl/elementwise.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np


def unbroadcast(grad, shape):
    """Sum ``grad`` down to ``shape`` undoing numpy broadcasting."""
    if grad.shape == tuple(shape):
        return grad

    extra = grad.ndim - len(shape)
    if extra > 0:
        grad = grad.sum(axis=tuple(range(extra)))

    axes = tuple(k for k, n in enumerate(shape)
                 if n == 1 and grad.shape[k] != 1)
    if axes:
        grad = grad.sum(axis=axes, keepdims=True)

    return grad


def _add(a, b):
    return a + b, lambda g: (g, g)


def _sub(a, b):
    return a - b, lambda g: (g, -g)


def _mul(a, b):
    return a * b, lambda g: (g * b, g * a)


def _div(a, b):
    if np.any(b == 0):
        raise DomainException('Division by zero')

    return a / b, lambda g: (g / b, -g * a / (b * b))


BINARY = {'add': _add, 'sub': _sub, 'mul': _mul, 'div': _div}


def _neg(x):
    return -x, lambda g: -g


def _relu(x):
    mask = x > 0
    return np.where(mask, x, 0).astype(x.dtype), lambda g: g * mask


def _exp(x):
    y = np.exp(x)
    return y, lambda g: g * y


def _log(x):
    if np.any(x <= 0):
        msg = 'Logarithm of non-positive value, min={0}'
        raise DomainException(msg.format(x.min()))

    return np.log(x), lambda g: g / x


def _sqrt(x):
    if np.any(x < 0):
        msg = 'Square root of negative value, min={0}'
        raise DomainException(msg.format(x.min()))

    y = np.sqrt(x)
    return y, lambda g: g * 0.5 / y


UNARY = {'neg': _neg, 'relu': _relu, 'exp': _exp, 'log': _log,
         'sqrt': _sqrt}


def binary(op_tag, a, b):
    a, b = _operands(a, b)

    try:
        np.broadcast_shapes(a.shape, b.shape)
    except ValueError:
        raise ShapeException(a.shape, b.shape, op_tag)

    data, adjoint = BINARY[op_tag](a.data, b.data)

    def backward(g):
        ga, gb = adjoint(g)
        return unbroadcast(ga, a.shape), unbroadcast(gb, b.shape)

    return make(data, op_tag, (a, b), backward)


def unary(op_tag, x):
    if op_tag not in UNARY:
        msg = "Unknown elementwise operation '{0}'"
        raise DomainException(msg.format(op_tag))

    data, adjoint = UNARY[op_tag](x.data)

    return make(data, op_tag, (x,), lambda g: (adjoint(g),))


def power(x, exponent):
    if isinstance(exponent, Tensor):
        msg = 'Only scalar exponents are supported'
        raise DomainException(msg)

    p = float(exponent)
    if p != int(p) and np.any(x.data < 0):
        msg = 'Fractional power {0} of negative value'
        raise DomainException(msg.format(p))

    data = x.data ** p

    def backward(g):
        return (g * p * x.data ** (p - 1),)

    return make(data, 'pow', (x,), backward)


def make(data, op_tag, parents, backward):
    """Create result tensor, recording it only when gradients flow."""
    if grad_enabled() and any(p.requires_grad for p in parents):
        return Tensor(data, requires_grad=True, op=op_tag,
                      parents=parents, backward=backward)

    return Tensor(data, op=op_tag)


def _operands(a, b):
    if not isinstance(a, Tensor):
        a = constant(a, like=b)
    if not isinstance(b, Tensor):
        b = constant(b, like=a)

    return a, b


from framer.util import ShapeException, DomainException
from framer.tensor import Tensor, constant, grad_enabled
