# coding: utf-8

# framer/backbone/config.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from dataclasses import dataclass

from framer.util import Section, ConfigException


@dataclass
class BackboneConfig(Section):

    """Shape of a toy denoiser.

       ``channels`` is the base width; the ``unet_like`` kind doubles it
       at every resolution level. ``cond_dim`` is the width of the
       conditioning vector, 0 disables it.
    """

    kind: str = 'dit_like'
    n_layers: int = 8
    channels: int = 16
    image_size: int = 32
    in_channels: int = 3
    cond_dim: int = 8
    time_dim: int = 64

    def validate(self):
        self.kind = kinds.cast(self.kind).name

        if self.n_layers < 3:
            msg = 'Backbone needs at least 3 layers, got {0}'
            raise ConfigException(msg.format(self.n_layers))
        for name in ('channels', 'image_size', 'in_channels'):
            if getattr(self, name) < 1:
                msg = "'{0}' must be positive, got {1}"
                raise ConfigException(msg.format(name, getattr(self, name)))
        if self.cond_dim < 0:
            msg = "'cond_dim' must not be negative, got {0}"
            raise ConfigException(msg.format(self.cond_dim))
        if self.time_dim < 2 or self.time_dim % 2:
            msg = "'time_dim' must be even and positive, got {0}"
            raise ConfigException(msg.format(self.time_dim))

        if self.kind == 'unet_like':
            factor = 2 ** unet_levels(self.n_layers)
            if self.image_size % factor:
                msg = 'Image size {0} not divisible by {1} for {2} levels'
                raise ConfigException(msg.format(self.image_size, factor,
                                                 unet_levels(self.n_layers)))

        return self


from framer.backbone.enum import kinds
from framer.backbone._impl.unet import unet_levels
