# coding: utf-8

# framer/backbone/_impl/checkpoint.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import OrderedDict
import json
import os

import numpy as np


FORMAT = 'framer-checkpoint'
VERSION = 1
PAYLOAD_DTYPE = '<f4'


def _paths(path):
    base = path[:-5] if path.endswith('.json') else path
    return base + '.json', base + '.bin'


def save_checkpoint(path, arrays, meta=None):
    """Write named arrays as a JSON manifest and a raw payload.

       :param path: manifest path or its prefix, ``.json`` and ``.bin``
         files are written next to each other
       :param arrays: mapping of name to array, order is kept
       :param meta: JSON serializable extra information
       :rtype: manifest path

       Payload entries are little-endian 32-bit floats in manifest order.
    """
    manifest_path, payload_path = _paths(path)
    entries, chunks, offset = [], [], 0
    for name, array in arrays.items():
        array = np.asarray(array)
        entries.append({'name': name, 'shape': list(array.shape),
                        'offset': offset, 'count': int(array.size)})
        chunks.append(array.astype(PAYLOAD_DTYPE).reshape(-1))
        offset += array.size

    payload = np.concatenate(chunks) if chunks else \
        np.zeros(0, dtype=PAYLOAD_DTYPE)
    with open(payload_path, 'wb') as f:
        f.write(payload.tobytes())

    manifest = {'format': FORMAT, 'version': VERSION,
                'dtype': PAYLOAD_DTYPE,
                'payload': os.path.basename(payload_path),
                'tensors': entries, 'meta': meta or {}}
    with open(manifest_path, 'w') as f:
        json.dump(manifest, f, indent=2, sort_keys=True)

    logger.info('Wrote checkpoint {0}'.format(manifest_path))

    return manifest_path


def load_checkpoint(path):
    """Read a checkpoint written by :func:`save_checkpoint`.

       :rtype: ``(arrays, meta)`` with float64 arrays in manifest order
    """
    manifest_path, _ = _paths(path)
    try:
        with open(manifest_path) as f:
            manifest = json.load(f)
    except (IOError, OSError, ValueError) as e:
        msg = 'Cannot read checkpoint manifest {0}: {1}'
        raise DataException(msg.format(manifest_path, e))

    if manifest.get('format') != FORMAT or \
            manifest.get('version') != VERSION:
        msg = 'Unsupported checkpoint {0} (format {1}, version {2})'
        raise DataException(msg.format(manifest_path, manifest.get('format'),
                                       manifest.get('version')))

    payload_path = os.path.join(os.path.dirname(manifest_path),
                                manifest['payload'])
    try:
        payload = np.fromfile(payload_path, dtype=manifest['dtype'])
    except (IOError, OSError) as e:
        msg = 'Cannot read checkpoint payload {0}: {1}'
        raise DataException(msg.format(payload_path, e))
    expected = sum(e['count'] for e in manifest['tensors'])
    if payload.size != expected:
        msg = 'Checkpoint payload {0} holds {1} values, expected {2}'
        raise DataException(msg.format(payload_path, payload.size, expected))

    arrays = OrderedDict()
    for e in manifest['tensors']:
        chunk = payload[e['offset']:e['offset'] + e['count']]
        arrays[e['name']] = chunk.astype(np.float64).reshape(e['shape'])

    return arrays, manifest['meta']


from framer.util import DataException
from framer.backbone import logger
