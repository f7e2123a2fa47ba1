# coding: utf-8

# framer/backbone/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Toy denoisers with per-layer feature taps.

   ``dit_like`` keeps one resolution through all blocks, ``unet_like``
   goes down and back up so intermediate taps need :class:`Adapters`
   before they can be compared with the teacher.

   >>> model = build_backbone(BackboneConfig(kind='unet_like'), seed=1)
   >>> eps, taps = model(z_t, t, lr_cond)
   >>> adapters = Adapters(model.tap_shapes(), seed=2)
   >>> features = adapters(taps)
"""

from logging import getLogger


logger = getLogger('framer.backbone')


def build_backbone(config, seed=0):
    """Create a backbone with parameters drawn from ``seed``.

       :param config: :class:`BackboneConfig` or mapping
    """
    if not isinstance(config, BackboneConfig):
        config = BackboneConfig.from_dict(config)
    else:
        config = config.validate()

    cls = {'dit_like': DiTBackbone, 'unet_like': UNetBackbone}[config.kind]

    return cls(config, seed)


def count_params(config):
    """Parameter count of the backbone ``config`` describes.

       Adapters are not included. Evaluated from closed-form expressions
       without building the model.
    """
    if not isinstance(config, BackboneConfig):
        config = BackboneConfig.from_dict(config)
    else:
        config = config.validate()

    cls = {'dit_like': DiTBackbone, 'unet_like': UNetBackbone}[config.kind]

    return cls.count(config)


from framer.backbone.enum import kinds
from framer.backbone.config import BackboneConfig
from framer.backbone._impl.layers import FeatureTap, timestep_embedding
from framer.backbone._impl.base import Backbone
from framer.backbone._impl.dit import DiTBackbone
from framer.backbone._impl.unet import UNetBackbone, unet_levels
from framer.backbone._impl.adapter import Adapters, adapt_tap
from framer.backbone._impl.checkpoint import save_checkpoint, load_checkpoint

__all__ = ['kinds', 'BackboneConfig', 'FeatureTap', 'timestep_embedding',
           'Backbone', 'DiTBackbone', 'UNetBackbone', 'unet_levels',
           'Adapters', 'adapt_tap', 'build_backbone', 'count_params',
           'save_checkpoint', 'load_checkpoint']
