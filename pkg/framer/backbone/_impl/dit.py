# coding: utf-8

# framer/backbone/_impl/dit.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from six.moves import range  # @UnresolvedImport

from framer.backbone._impl.base import Backbone


class DiTBackbone(Backbone):

    """Constant resolution stack of residual mixing blocks.

       Every tap has the shape ``[B, channels, S, S]`` so taps reach the
       loss without adapters.
    """

    def _build(self):
        c = self.config.channels
        for i in range(1, self.n_layers + 1):
            residual_block_params(self.params, 'block.{0}'.format(i), c, c)

    def _body(self, h, emb):
        features = []
        for i in range(1, self.n_layers + 1):
            h = residual_block(self.params, 'block.{0}'.format(i), h, emb)
            features.append(h)

        return features

    def tap_shapes(self):
        c, s = self.config.channels, self.config.image_size
        return [(c, s, s)] * self.n_layers

    @classmethod
    def count(cls, config):
        c = config.channels
        return (cls._stem_count(config) +
                config.n_layers * residual_block_count(c, c))


from framer.backbone._impl.layers import (residual_block_params,
                                          residual_block_count,
                                          residual_block)
