# coding: utf-8

# framer/tensor/_impl/conv.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from __future__ import division

import numpy as np
from six import integer_types
from six.moves import range  # @UnresolvedImport

from framer.util import memoized


def _pad_widths(pad):
    if isinstance(pad, integer_types):
        return (pad, pad, pad, pad)

    pad = tuple(pad)
    if len(pad) == 2:
        return (pad[0], pad[0], pad[1], pad[1])

    return pad


def pad2d(x, pad, mode='zeros'):
    """Pad the two trailing axes of ``x``.

       :param pad: int or ``(top, bottom, left, right)``
       :param mode: ``zeros`` or ``reflect`` (edge pixel not repeated,
         OpenCV ``BORDER_REFLECT_101``)
    """
    top, bottom, left, right = _pad_widths(pad)
    if not (top or bottom or left or right):
        return x

    h, w = x.shape[-2:]
    lead = ((0, 0),) * (x.ndim - 2)

    if mode == 'zeros':
        data = np.pad(x.data, lead + ((top, bottom), (left, right)))

        def backward(g):
            return (g[..., top:top + h, left:left + w],)
    elif mode == 'reflect':
        if max(top, bottom) >= h or max(left, right) >= w:
            msg = 'Reflect padding {0} too large for extent {1}'
            raise ShapeException((top, bottom, left, right), (h, w), msg)

        rows = np.pad(np.arange(h), (top, bottom), mode='reflect')
        cols = np.pad(np.arange(w), (left, right), mode='reflect')
        data = x.data[..., rows[:, None], cols[None, :]]

        def backward(g):
            out = np.zeros((x.size // (h * w), h, w), dtype=x.dtype)
            flat = g.reshape((-1,) + g.shape[-2:])
            # several padded positions map to one source pixel
            np.add.at(out, (slice(None), rows[:, None], cols[None, :]), flat)
            return (out.reshape(x.shape),)
    else:
        msg = "Unknown padding mode '{0}'"
        raise DomainException(msg.format(mode))

    return make(data, 'pad2d', (x,), backward)


def _correlate(x, k, stride):
    """Valid cross-correlation recorded as one graph node."""
    b, c, h, w = x.shape
    o, _, kh, kw = k.shape
    ho = (h - kh) // stride + 1
    wo = (w - kw) // stride + 1
    if ho < 1 or wo < 1:
        raise ShapeException(x.shape, k.shape, 'conv2d')

    def window(i, j):
        return (Ellipsis, slice(i, i + stride * (ho - 1) + 1, stride),
                slice(j, j + stride * (wo - 1) + 1, stride))

    out = np.zeros((b, o, ho * wo), dtype=np.result_type(x.data, k.data))
    for i in range(kh):
        for j in range(kw):
            patch = x.data[window(i, j)].reshape(b, c, ho * wo)
            out += np.matmul(k.data[:, :, i, j], patch)

    def backward(g):
        g = g.reshape(b, o, ho * wo)
        dx = np.zeros_like(x.data)
        dk = np.zeros_like(k.data)
        for i in range(kh):
            for j in range(kw):
                patch = x.data[window(i, j)].reshape(b, c, ho * wo)
                dk[:, :, i, j] = np.einsum('bon,bcn->oc', g, patch)
                dpatch = np.matmul(k.data[:, :, i, j].T, g)
                dx[window(i, j)] += dpatch.reshape(b, c, ho, wo)
        return dx, dk

    return make(out.reshape(b, o, ho, wo), 'conv2d', (x, k), backward)


def conv2d(x, k, bias=None, stride=1, pad='same', pad_mode='zeros'):
    """2-D cross-correlation (no kernel flip).

       :param x: input ``[B,C,H,W]``
       :param k: kernel ``[O,C,kh,kw]`` with odd ``kh``, ``kw``
       :param bias: optional ``[O]``
       :param pad: ``'same'`` (half kernel extent) or explicit int/tuple
       :param pad_mode: ``zeros`` (default) or ``reflect``
       :rtype: :class:`framer.tensor.Tensor` ``[B,O,H',W']``

       ``out[b,o,y,x] = sum_{c,i,j} k[o,c,i,j] * xp[b,c,y*s+i,x*s+j]`` where
       ``xp`` is the padded input.
    """
    if x.ndim != 4 or k.ndim != 4:
        raise ShapeException(x.shape, k.shape, 'conv2d')
    if x.shape[1] != k.shape[1]:
        msg = 'conv2d channel mismatch'
        raise ShapeException(x.shape, k.shape, msg)

    kh, kw = k.shape[2:]
    if not (kh % 2 and kw % 2):
        msg = 'conv2d kernel extents must be odd'
        raise ShapeException(k.shape[2:], (kh | 1, kw | 1), msg)

    if pad == 'same':
        pad = (kh // 2, kh // 2, kw // 2, kw // 2)

    out = _correlate(pad2d(x, pad, pad_mode), k, int(stride))
    if bias is not None:
        out = out + bias.reshape(1, -1, 1, 1)

    return out


@memoized
def resample_matrix(n_in, n_out):
    """Linear interpolation weights ``[n_out, n_in]``.

       Half-pixel centres without corner alignment, clamped at edges. Rows
       sum to one so constant fields are preserved exactly.
    """
    matrix = np.zeros((n_out, n_in))
    scale = n_in / n_out
    for o in range(n_out):
        src = min(max((o + 0.5) * scale - 0.5, 0.0), n_in - 1)
        i0 = int(np.floor(src))
        i1 = min(i0 + 1, n_in - 1)
        frac = src - i0
        matrix[o, i0] += 1 - frac
        matrix[o, i1] += frac

    matrix.flags.writeable = False

    return matrix


def resize_bilinear(x, size):
    """Bilinearly resize the two trailing axes to ``size=(H, W)``."""
    h, w = x.shape[-2:]
    ho, wo = size
    if (h, w) == (ho, wo):
        return x

    rows = resample_matrix(h, ho).astype(x.dtype)
    cols = resample_matrix(w, wo).astype(x.dtype)
    data = np.matmul(np.matmul(rows, x.data), cols.T)

    def backward(g):
        return (np.matmul(np.matmul(rows.T, g), cols),)

    return make(data, 'resize', (x,), backward)


from framer.util import ShapeException, DomainException
from framer.tensor._impl.elementwise import make
