# coding: utf-8

# framer/backbone/_impl/adapter.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np


class Adapters(object):

    """Training only heads mapping taps to the teacher tap shape.

       One ``1x1`` convolution (plus bilinear resize when the extent
       differs) is created for every layer whose ``(C, H, W)`` differs
       from ``target``. Layers already of that shape pass through.

       :param tap_shapes: ``(C, H, W)`` per layer, ascending
       :param target: defaults to the final layer shape
    """

    def __init__(self, tap_shapes, target=None, seed=0):
        self.target = tuple(target or tap_shapes[-1])
        self.params = ParameterSet(np.random.default_rng(seed))
        self.layers = set()

        for i, shape in enumerate(tap_shapes, 1):
            if tuple(shape) != self.target:
                self.params.conv(_name(i), self.target[0], shape[0], 1)
                self.layers.add(i)

    def parameters(self):
        return list(self.params.tensors.values())

    def state_dict(self):
        return self.params.state()

    def load_state_dict(self, arrays):
        self.params.load(arrays)

    def __call__(self, taps):
        """Adapted features of ``taps`` in order."""
        return [adapt_tap(tap, self.target, self) for tap in taps]


def _name(i):
    return 'adapter.{0}'.format(i)


def adapt_tap(tap, target, adapters=None):
    """Feature of ``tap`` mapped to ``target = (C, H, W)``.

       Taps already of the target shape are returned unchanged.
    """
    feature = tap.feature
    if tuple(feature.shape[1:]) == tuple(target):
        return feature

    if adapters is None or tap.i not in adapters.layers:
        raise ShapeException(feature.shape[1:], target, 'adapt_tap')

    feature = conv(adapters.params, _name(tap.i), feature)
    if tuple(feature.shape[2:]) != tuple(target[1:]):
        feature = resize_bilinear(feature, target[1:])

    return feature


from framer.util import ShapeException
from framer.tensor import resize_bilinear
from framer.backbone._impl.layers import ParameterSet, conv
