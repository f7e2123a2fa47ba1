# coding: utf-8

# framer/backbone/_impl/base.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np


class Backbone(object):

    """Toy noise predictor exposing the output of every block.

       Subclasses build their blocks in :meth:`_build` and run them in
       :meth:`_body`. The stem consumes the noisy image concatenated with
       the resized low resolution condition; the head is zero initialized
       so a fresh model predicts zero noise.
    """

    def __init__(self, config, seed=0):
        self.config = config
        self.params = ParameterSet(np.random.default_rng(seed))

        c, hidden = config.channels, config.channels
        self.params.conv('stem', c, 2 * config.in_channels, 3)
        self.params.linear('time', config.time_dim, hidden)
        if config.cond_dim:
            self.params.linear('cond', config.cond_dim, hidden)
        self._build()
        self.params.conv('head', config.in_channels, self.final_channels,
                         3, zero=True)

        msg = 'Built {0} backbone with {1} layers and {2} parameters'
        logger.debug(msg.format(config.kind, config.n_layers,
                                self.params.count()))

    @property
    def n_layers(self):
        return self.config.n_layers

    @property
    def final_channels(self):
        return self.config.channels

    @classmethod
    def _stem_count(cls, config):
        c, cin = config.channels, config.in_channels
        count = 9 * 2 * cin * c + c + config.time_dim * c + c
        if config.cond_dim:
            count += config.cond_dim * c + c

        return count + 9 * c * cin + cin

    def parameters(self):
        return list(self.params.tensors.values())

    def named_parameters(self):
        return list(self.params)

    def state_dict(self):
        return self.params.state()

    def load_state_dict(self, arrays):
        self.params.load(arrays)

    def tap_shapes(self):
        """``(C, H, W)`` of every tap in ascending layer order."""
        raise NotImplementedError()

    def _embed(self, t, c, batch):
        t = np.broadcast_to(np.asarray(t, dtype=np.float64).reshape(-1),
                            (batch,))
        emb = linear(self.params, 'time',
                     Tensor(timestep_embedding(t, self.config.time_dim)))
        if self.config.cond_dim and c is not None:
            c = c if isinstance(c, Tensor) else Tensor(c)
            if c.shape != (batch, self.config.cond_dim):
                raise ShapeException(c.shape, (batch, self.config.cond_dim),
                                     'conditioning')
            emb = emb + linear(self.params, 'cond', c)

        return emb.relu()

    def _check(self, z_t, lr_cond):
        expected = (self.config.in_channels, self.config.image_size,
                    self.config.image_size)
        if z_t.ndim != 4 or z_t.shape[1:] != expected:
            raise ShapeException(z_t.shape, ('B',) + expected, 'forward')
        if lr_cond.shape != z_t.shape:
            raise ShapeException(lr_cond.shape, z_t.shape, 'forward')

    def forward(self, z_t, t, lr_cond, c=None, taps=True):
        """Predict the noise in ``z_t``.

           :param z_t: noisy image ``[B, C, S, S]``
           :param t: timestep or per-sample timesteps ``[B]``
           :param lr_cond: low resolution condition resized to ``S``
           :param c: optional conditioning vectors ``[B, cond_dim]``
           :param taps: emit :class:`FeatureTap` list when true
           :rtype: ``(eps_pred, taps)``
        """
        z_t = z_t if isinstance(z_t, Tensor) else Tensor(z_t)
        lr_cond = lr_cond if isinstance(lr_cond, Tensor) else Tensor(lr_cond)
        self._check(z_t, lr_cond)

        emb = self._embed(t, c, z_t.shape[0])
        h = conv(self.params, 'stem', concat([z_t, lr_cond], axis=1))
        features = self._body(h, emb)
        eps = conv(self.params, 'head', features[-1].relu())

        if not taps:
            return eps, []

        n = len(features)
        return eps, [FeatureTap(i, f, i == n, i / float(n))
                     for i, f in enumerate(features, 1)]

    __call__ = forward


from framer.util import ShapeException
from framer.tensor import Tensor, concat
from framer.backbone import logger
from framer.backbone._impl.layers import (ParameterSet, FeatureTap,
                                          timestep_embedding, conv, linear)
