# coding: utf-8

# framer/harness/optim.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import OrderedDict

import numpy as np


class Adam(object):

    """Adam with bias correction over a list of parameter tensors.

       :meth:`zero_grad` fills every gradient with zeros, so a parameter
       that does not feed the loss reads a zero gradient after the backward
       pass. Parameters whose ``grad`` is still ``None`` are skipped.
    """

    def __init__(self, params, lr=1e-3, betas=(0.9, 0.999), eps=1e-8):
        self.params = list(params)
        self.lr = lr
        self.betas = tuple(betas)
        self.eps = eps
        self.t = 0
        self.m = [np.zeros_like(p.data) for p in self.params]
        self.v = [np.zeros_like(p.data) for p in self.params]

    def zero_grad(self):
        for p in self.params:
            p.zero_grad()

    def step(self):
        self.t += 1
        b1, b2 = self.betas
        correction1 = 1.0 - b1 ** self.t
        correction2 = 1.0 - b2 ** self.t

        for k, p in enumerate(self.params):
            if p.grad is None:
                continue
            g = p.grad
            self.m[k] = b1 * self.m[k] + (1.0 - b1) * g
            self.v[k] = b2 * self.v[k] + (1.0 - b2) * g * g
            m_hat = self.m[k] / correction1
            v_hat = self.v[k] / correction2
            p.data = p.data - self.lr * m_hat / (np.sqrt(v_hat) + self.eps)

    def state_dict(self):
        """Moments keyed ``adam.m.<k>`` and ``adam.v.<k>``.

           The step count is ``t`` and is stored by the caller.
        """
        state = OrderedDict()
        for k in range(len(self.params)):
            state['adam.m.{0}'.format(k)] = self.m[k]
            state['adam.v.{0}'.format(k)] = self.v[k]

        return state

    def load_state_dict(self, arrays, t):
        for k, p in enumerate(self.params):
            for name, moments in (('m', self.m), ('v', self.v)):
                key = 'adam.{0}.{1}'.format(name, k)
                if key not in arrays:
                    msg = 'Optimizer state lacks {0}'
                    raise DataException(msg.format(key))
                data = np.asarray(arrays[key], dtype=np.float64)
                if data.shape != p.shape:
                    raise ShapeException(data.shape, p.shape, 'Adam')
                moments[k] = data
        self.t = int(t)


from framer.util import ShapeException, DataException
