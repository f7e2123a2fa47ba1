# coding: utf-8

# framer/analysis/output.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from __future__ import with_statement

import csv

import numpy as np


CURVE_COLUMNS = ('t', 'depth', 'cos_lf', 'cos_hf')
METRIC_COLUMNS = ('image_id', 'psnr', 'ssim')


def _number(value):
    if isinstance(value, (float, np.floating)):
        return '{0:.10g}'.format(value)

    return str(value)


def _write(path, header, rows):
    with open(path, 'w') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        if header:
            writer.writerow(header)
        for row in rows:
            writer.writerow([_number(v) for v in row])

    logger.info('Wrote {0}'.format(path))

    return path


def write_rows(path, header, rows):
    """Write rows under an arbitrary header."""
    return _write(path, header, rows)


def write_layer_curves(path, rows):
    """Write :class:`CurveRow` items as ``t,depth,cos_lf,cos_hf``."""
    return _write(path, CURVE_COLUMNS, rows)


def write_matrix(path, matrix):
    """Write a square matrix without header, one row per line."""
    return _write(path, None, np.asarray(matrix))


def write_metrics(path, rows):
    return _write(path, METRIC_COLUMNS, rows)


def read_csv(path):
    """Rows of a CSV written here as dictionaries of strings."""
    try:
        with open(path) as handle:
            return list(csv.DictReader(handle))
    except (IOError, OSError) as error:
        msg = 'Can not read {0}: {1}'
        raise DataException(msg.format(path, error))


from framer.util import DataException
from framer.analysis import logger
