# coding: utf-8

# framer/backbone/_impl/unet.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from six.moves import range  # @UnresolvedImport

from framer.backbone._impl.base import Backbone


def unet_levels(n_layers):
    """Number of down (and up) stages, at most 2 with one middle block
       left over."""
    return min(2, (n_layers - 1) // 2)


def _plan(config):
    """``(kind, level)`` of every block in forward order."""
    levels = unet_levels(config.n_layers)
    middle = config.n_layers - 2 * levels

    return ([('down', l) for l in range(1, levels + 1)] +
            [('middle', levels)] * middle +
            [('up', l) for l in range(levels - 1, -1, -1)])


class UNetBackbone(Backbone):

    """Encoder/decoder whose taps change resolution and width.

       Level ``l`` runs at ``S / 2**l`` with ``channels * 2**l`` channels.
       Down blocks use a strided convolution, up blocks resize bilinearly
       and concatenate the skip feature of the target level. The final up
       block returns to full resolution and is the teacher layer.
    """

    def _width(self, level):
        return self.config.channels * 2 ** level

    def _build(self):
        hidden = self.config.channels
        for i, (kind, level) in enumerate(_plan(self.config), 1):
            name = 'block.{0}'.format(i)
            width = self._width(level)
            if kind == 'middle':
                residual_block_params(self.params, name, width, hidden)
                continue

            source = self._width(level - 1 if kind == 'down' else level + 1)
            if kind == 'up':
                source += width
            self.params.conv(name + '.resample', width, source, 3)
            self.params.linear(name + '.time', hidden, width)
            self.params.conv(name + '.spatial', width, width, 3)

    def _body(self, h, emb):
        size = self.config.image_size
        skips = {0: h}
        features = []
        for i, (kind, level) in enumerate(_plan(self.config), 1):
            name = 'block.{0}'.format(i)
            if kind == 'middle':
                h = residual_block(self.params, name, h, emb)
            else:
                if kind == 'down':
                    h = conv(self.params, name + '.resample', h, stride=2)
                else:
                    extent = size // 2 ** level
                    h = resize_bilinear(h, (extent, extent))
                    h = conv(self.params, name + '.resample',
                             concat([h, skips[level]], axis=1))
                bias = channel_bias(linear(self.params, name + '.time', emb))
                h = (h + bias).relu()
                h = h + conv(self.params, name + '.spatial', h.relu())
                if kind == 'down':
                    skips[level] = h
            features.append(h)

        return features

    def tap_shapes(self):
        s = self.config.image_size
        return [(self._width(level), s // 2 ** level, s // 2 ** level)
                for _, level in _plan(self.config)]

    @classmethod
    def count(cls, config):
        hidden = config.channels
        total = cls._stem_count(config)
        for kind, level in _plan(config):
            width = config.channels * 2 ** level
            if kind == 'middle':
                total += residual_block_count(width, hidden)
                continue
            source = config.channels * 2 ** (level - 1 if kind == 'down'
                                             else level + 1)
            if kind == 'up':
                source += width
            total += (9 * source * width + width + hidden * width + width +
                      9 * width * width + width)

        return total


from framer.tensor import concat, resize_bilinear
from framer.backbone._impl.layers import (residual_block_params,
                                          residual_block_count,
                                          residual_block, conv, linear,
                                          channel_bias)
