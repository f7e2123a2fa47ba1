# coding: utf-8

# framer/tensor/_impl/fourier.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import numpy as np


def _project(data, mask):
    spectrum = np.fft.fft2(data, axes=(-2, -1))
    return np.real(np.fft.ifft2(spectrum * mask, axes=(-2, -1)))


def spectral_project(x, mask):
    """Keep the frequencies selected by ``mask`` and return to space.

       :param x: tensor ``[..., H, W]``
       :param mask: real array ``[H, W]`` in unshifted FFT order (DC at
         ``[0, 0]``) and point symmetric, so the result is real

       The operator is linear and self adjoint for a point symmetric binary
       mask, hence the backward pass applies the same projection.
    """
    mask = np.asarray(mask)
    if x.shape[-2:] != mask.shape:
        raise ShapeException(x.shape[-2:], mask.shape, 'spectral_project')

    data = _project(x.data, mask).astype(x.dtype, copy=False)

    return make(data, 'spectral', (x,),
                lambda g: (_project(g, mask).astype(g.dtype, copy=False),))


from framer.util import ShapeException
from framer.tensor._impl.elementwise import make
