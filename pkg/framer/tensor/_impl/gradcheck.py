# coding: utf-8

# framer/tensor/_impl/gradcheck.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple

import numpy as np
from six import iteritems


class GradCheckReport(namedtuple('GradCheckReport', 'errors tol passed')):

    """Outcome of :func:`grad_check`.

       ``errors`` maps parameter name to maximum relative error between
       the analytic gradient and central differences.
    """

    def __str__(self):
        rows = ['{0}: {1:.3e}'.format(k, v)
                for k, v in sorted(iteritems(self.errors))]
        status = 'passed' if self.passed else 'FAILED'
        return '{0} (tol={1:g}) {2}'.format(status, self.tol, ', '.join(rows))


def _evaluate(f):
    with no_grad():
        value = f()

    value = value.item() if isinstance(value, Tensor) else float(value)
    if not np.isfinite(value):
        msg = 'Objective is not finite: {0}'
        raise DomainException(msg.format(value))

    return value


def grad_check(f, params, h=1e-5, tol=1e-4, floor=1e-6,
               max_elements=None, seed=0):
    """Compare backward gradients with central finite differences.

       :param f: callable without arguments returning a scalar tensor built
         from ``params``; must be deterministic
       :param params: mapping of name to leaf :class:`Tensor` or sequence
         of tensors (named by position)
       :param h: finite difference step
       :param tol: pass threshold on the relative error
       :param floor: lower bound of the relative error denominator
       :param max_elements: check at most this many random entries per
         parameter
       :rtype: :class:`GradCheckReport`

       Relative error is ``|a - n| / max(|a|, |n|, floor)``.
    """
    if not isinstance(params, dict):
        params = dict((str(k), p) for k, p in enumerate(params))

    for p in params.values():
        p.grad = None

    loss = f()
    if not np.isfinite(loss.data).all():
        msg = 'Objective is not finite: {0}'
        raise DomainException(msg.format(loss.data))
    loss.backward()

    rng = np.random.default_rng(seed)
    errors = {}
    for name, p in sorted(iteritems(params)):
        analytic = p.grad if p.grad is not None else np.zeros_like(p.data)
        indices = list(np.ndindex(*p.shape))
        if max_elements is not None and len(indices) > max_elements:
            picked = rng.choice(len(indices), max_elements, replace=False)
            indices = [indices[k] for k in sorted(picked)]

        worst = 0.0
        for index in indices:
            saved = p.data[index]
            p.data[index] = saved + h
            plus = _evaluate(f)
            p.data[index] = saved - h
            minus = _evaluate(f)
            p.data[index] = saved

            numeric = (plus - minus) / (2 * h)
            a = analytic[index]
            error = abs(a - numeric) / max(abs(a), abs(numeric), floor)
            worst = max(worst, error)

        errors[name] = worst
        logger.debug('grad_check {0}: {1:.3e}'.format(name, worst))

    passed = all(e <= tol for e in errors.values())

    return GradCheckReport(errors, tol, passed)


from framer.util import DomainException
from framer.tensor import Tensor, no_grad, logger
