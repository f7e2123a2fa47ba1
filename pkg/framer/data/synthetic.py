# coding: utf-8

# framer/data/synthetic.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np


def pink_noise(generator, size, channels=3, exponent=1.0):
    """Random field with ``1/f**exponent`` amplitude, scaled to ``[0, 1]``.

       Phases are uniform and drawn per channel.
    """
    fy = np.fft.fftfreq(size)[:, None]
    fx = np.fft.fftfreq(size)[None, :]
    radius = np.sqrt(fx ** 2 + fy ** 2)
    radius[0, 0] = 1.0 / size
    amplitude = radius ** -exponent

    out = np.empty((channels, size, size))
    for c in range(channels):
        phase = generator.uniform(0, 2 * np.pi, (size, size))
        field = np.real(np.fft.ifft2(amplitude * np.exp(1j * phase)))
        field -= field.min()
        out[c] = field / max(field.max(), 1e-12)

    return out


def draw_shapes(img, generator, count=4):
    """Paint ``count`` solid rectangles and discs of random colour.

       Modifies and returns ``img[C, H, W]``.
    """
    channels, h, w = img.shape
    ys, xs = np.ogrid[:h, :w]

    for _ in range(count):
        colour = generator.uniform(size=channels)[:, None]
        cy, cx = generator.uniform(0, h), generator.uniform(0, w)
        extent = generator.uniform(0.05, 0.3) * min(h, w)
        if generator.uniform() < 0.5:
            mask = (np.abs(ys - cy) <= extent) & (np.abs(xs - cx) <=
                                                  extent * 0.7)
        else:
            mask = (ys - cy) ** 2 + (xs - cx) ** 2 <= extent ** 2
        img[:, mask] = colour

    return img


def synthetic_image(size, seed, shapes=4, channels=3):
    """Pink noise background with geometric shapes, a function of ``seed``.
    """
    generator = np.random.default_rng(seed)
    img = pink_noise(generator, size, channels)

    return draw_shapes(img, generator, shapes)


class SyntheticSource(object):

    """``count`` synthetic images of extent ``size``.

       Image ``k`` is generated from the seed sequence ``[seed, k]`` so
       any image can be recreated without the others.
    """

    def __init__(self, count=256, size=32, seed=0, shapes=4):
        if count < 1:
            msg = 'Synthetic source needs at least one image, got {0}'
            raise DataException(msg.format(count))

        self.count = count
        self.size = size
        self.seed = seed
        self.shapes = shapes

    def __len__(self):
        return self.count

    def __getitem__(self, index):
        if not 0 <= index < self.count:
            raise IndexError(index)

        sequence = np.random.SeedSequence([self.seed, index])
        return synthetic_image(self.size, sequence, self.shapes)

    def __repr__(self):
        template = '<SyntheticSource({0}x{1}px,seed={2}) object at {3}>'
        return template.format(self.count, self.size, self.seed,
                               hex(id(self)))


from framer.util import DataException
