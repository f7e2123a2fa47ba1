# coding: utf-8

# framer/data/batches.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple
from threading import Thread, Event
import sys

import numpy as np
from six import reraise
from six.moves import queue


class Batch(namedtuple('Batch', 'step hr lr lr_resized seeds')):

    """Degraded pairs stacked along a leading batch axis."""

    def __len__(self):
        return len(self.hr)


class BatchSource(object):

    """Degraded training batches keyed by step.

       ``batch(step)`` depends only on ``(seed, step)``: image indices and
       per-sample degradation seeds come from the seed sequence
       ``[seed, step]``, so batches can be prepared in any order or on any
       thread.

       :param images: indexable image source
       :param degradation: :class:`framer.degradation.DegradationConfig`
    """

    def __init__(self, images, degradation, batch_size, seed):
        if not len(images):
            raise DataException('Empty image source')
        if batch_size < 1:
            msg = 'Batch size must be positive, got {0}'
            raise DataException(msg.format(batch_size))

        self.images = images
        self.degradation = degradation
        self.batch_size = batch_size
        self.seed = seed

    def batch(self, step):
        sequence = np.random.SeedSequence([self.seed, step])
        picker, pairs = sequence.spawn(2)

        indices = np.random.default_rng(picker).integers(
            len(self.images), size=self.batch_size)
        seeds = [int(child.generate_state(1)[0])
                 for child in pairs.spawn(self.batch_size)]

        samples = [make_pair(self.images[int(k)], self.degradation, s)
                   for k, s in zip(indices, seeds)]

        return Batch(step, np.stack([p.hr for p in samples]),
                     np.stack([p.lr for p in samples]),
                     np.stack([p.lr_resized for p in samples]), seeds)

    __getitem__ = batch


class Prefetcher(object):

    """Prepare ``source.batch(step)`` for ``steps`` on a worker thread.

       Batches are yielded in step order through a queue holding at most
       ``depth`` entries. An exception raised by the worker is re-raised
       in the consuming thread.

       >>> with Prefetcher(source, range(1, 101)) as batches:
       ...     for batch in batches:
       ...         train_step(batch)
    """

    _done = object()

    def __init__(self, source, steps, depth=2):
        self.source = source
        self.steps = list(steps)
        self.queue = queue.Queue(maxsize=max(1, depth))
        self.stopped = Event()
        self.thread = Thread(target=self._work, name='framer-prefetch')
        self.thread.daemon = True
        self.started = False

    def _put(self, item):
        while not self.stopped.is_set():
            try:
                self.queue.put(item, timeout=0.1)
                return True
            except queue.Full:
                pass

        return False

    def _work(self):
        try:
            for step in self.steps:
                if not self._put(('batch', self.source.batch(step))):
                    return
        except Exception:
            self._put(('error', sys.exc_info()))
            return

        self._put(('done', self._done))

    def start(self):
        if not self.started:
            self.started = True
            self.thread.start()

        return self

    def __iter__(self):
        self.start()
        while True:
            kind, value = self.queue.get()
            if kind == 'done':
                return
            if kind == 'error':
                reraise(*value)
            yield value

    def close(self):
        self.stopped.set()
        if self.started:
            self.thread.join()

    def __enter__(self):
        return self.start()

    def __exit__(self, *args):
        self.close()


def open_source(path=None, count=256, size=32, seed=0):
    """Image directory at ``path`` or a :class:`SyntheticSource`."""
    if path:
        return ImageDirectory(path)

    return SyntheticSource(count, size, seed)


from framer.util import DataException
from framer.degradation import make_pair
from framer.data.io import ImageDirectory
from framer.data.synthetic import SyntheticSource
