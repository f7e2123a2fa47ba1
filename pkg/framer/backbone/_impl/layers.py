# coding: utf-8

# framer/backbone/_impl/layers.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple, OrderedDict
import math

import numpy as np


def timestep_embedding(t, dim, max_period=10000.0):
    """Sinusoidal embedding ``[cos(t f_k), sin(t f_k)]`` of timesteps.

       :param t: array like of timesteps ``[B]``
       :param dim: even embedding width
       :rtype: ``numpy`` array ``[B, dim]``
    """
    t = np.asarray(t, dtype=np.float64).reshape(-1)
    half = dim // 2
    freqs = np.exp(-math.log(max_period) * np.arange(half) / half)
    args = t[:, None] * freqs[None, :]

    return np.concatenate([np.cos(args), np.sin(args)], axis=1)


class FeatureTap(namedtuple('FeatureTap', 'i feature is_teacher depth')):

    """Observed output of block ``i`` of ``n``.

       ``depth`` is ``i / n``; ``is_teacher`` marks the final block.
    """

    @property
    def shape(self):
        return self.feature.shape


class ParameterSet(object):

    """Ordered named leaf tensors with deterministic initialization."""

    def __init__(self, rng):
        self.rng = rng
        self.tensors = OrderedDict()

    def __getitem__(self, name):
        return self.tensors[name]

    def __contains__(self, name):
        return name in self.tensors

    def __iter__(self):
        return iter(self.tensors.items())

    def __len__(self):
        return len(self.tensors)

    def _add(self, name, data):
        self.tensors[name] = Tensor(data, requires_grad=True)

    def conv(self, name, out_channels, in_channels, size, zero=False):
        shape = (out_channels, in_channels, size, size)
        if zero:
            weight = np.zeros(shape)
        else:
            std = math.sqrt(2.0 / (in_channels * size * size))
            weight = self.rng.normal(0.0, std, shape)

        self._add(name + '.weight', weight)
        self._add(name + '.bias', np.zeros(out_channels))

    def linear(self, name, in_features, out_features):
        std = math.sqrt(1.0 / in_features)
        self._add(name + '.weight',
                  self.rng.normal(0.0, std, (in_features, out_features)))
        self._add(name + '.bias', np.zeros(out_features))

    def count(self):
        return sum(t.size for t in self.tensors.values())

    def state(self):
        return OrderedDict((name, t.data.copy())
                           for name, t in self.tensors.items())

    def load(self, arrays):
        """Overwrite parameter values in place, names and shapes must match.

           Tensors keep their identity so optimizers holding them stay
           attached.
        """
        missing = set(self.tensors) - set(arrays)
        if missing:
            msg = 'Checkpoint lacks parameters: {0}'
            raise DataException(msg.format(', '.join(sorted(missing))))

        for name, current in self.tensors.items():
            data = np.asarray(arrays[name], dtype=np.float64)
            if data.shape != current.shape:
                raise ShapeException(data.shape, current.shape, name)
            current.data = data.copy()
            current.grad = None


def conv(params, name, x, stride=1):
    return conv2d(x, params[name + '.weight'], params[name + '.bias'],
                  stride=stride)


def linear(params, name, x):
    return matmul(x, params[name + '.weight']) + params[name + '.bias']


def channel_bias(v):
    """Reshape ``[B, C]`` to ``[B, C, 1, 1]`` for broadcasting."""
    return v.reshape(v.shape[0], v.shape[1], 1, 1)


def residual_block_params(params, name, channels, hidden):
    params.conv(name + '.spatial', channels, channels, 3)
    params.conv(name + '.channel', channels, channels, 1)
    params.linear(name + '.time', hidden, channels)


def residual_block_count(channels, hidden):
    return (9 * channels * channels + channels + channels * channels +
            channels + hidden * channels + channels)


def residual_block(params, name, h, emb):
    """Spatial mixing then channel mixing, both residual."""
    bias = channel_bias(linear(params, name + '.time', emb))
    h = h + conv(params, name + '.spatial', h.relu() + bias)

    return h + conv(params, name + '.channel', h.relu())


from framer.util import ShapeException, DataException
from framer.tensor import Tensor, conv2d, matmul
