# coding: utf-8

# framer/tensor/_impl/graph.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple

import numpy as np


Node = namedtuple('Node', 'op inputs tensor')


class Graph(object):

    """Topologically ordered record of the operations behind a tensor.

       ``nodes`` is a list of :class:`Node` triples ``(op, inputs, tensor)``
       where ``inputs`` are indices of earlier nodes. Only tensors that
       require gradients are recorded.
    """

    def __init__(self, root):
        self.tensors = _toposort(root)
        index = dict((id(t), k) for k, t in enumerate(self.tensors))
        self.nodes = [Node(t.op, tuple(index[id(p)] for p in t._parents
                                       if id(p) in index), t)
                      for t in self.tensors]

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def leaves(self):
        return [t for t in self.tensors if t.is_leaf]


def _toposort(root):
    order = []
    seen = set()
    stack = [(root, False)]
    while stack:
        tensor, expanded = stack.pop()
        if expanded:
            order.append(tensor)
            continue
        if id(tensor) in seen:
            continue
        seen.add(id(tensor))
        stack.append((tensor, True))
        for parent in tensor._parents:
            if parent.requires_grad and id(parent) not in seen:
                stack.append((parent, False))

    return order


def backward(root, grad=None):
    if not root.requires_grad:
        msg = 'Tensor {0} does not require grad'
        raise DomainException(msg.format(root))

    if grad is None:
        if root.size != 1:
            msg = 'backward() without a seed requires a scalar, got {0}'
            raise ShapeException(root.shape, (), msg.format(root.shape))
        grad = np.ones_like(root.data)
    else:
        grad = np.asarray(grad, dtype=root.data.dtype)
        if grad.shape != root.shape:
            raise ShapeException(grad.shape, root.shape, 'backward')

    graph = Graph(root)
    logger.debug('Backward through {0} nodes'.format(len(graph)))

    grads = {id(root): grad}
    for tensor in reversed(graph.tensors):
        g = grads.pop(id(tensor), None)

        if tensor.is_leaf:
            if g is None:
                g = np.zeros_like(tensor.data)
            if tensor.grad is None:
                tensor.grad = np.array(g, dtype=tensor.data.dtype)
            else:
                tensor.grad = tensor.grad + g
            continue

        if g is None:
            continue

        for parent, pg in zip(tensor._parents, tensor._backward(g)):
            if pg is None or not parent.requires_grad:
                continue
            key = id(parent)
            grads[key] = grads[key] + pg if key in grads else pg


from framer.util import ShapeException, DomainException
from framer.tensor import logger
