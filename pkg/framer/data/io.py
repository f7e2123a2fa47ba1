# coding: utf-8

# framer/data/io.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import os

import cv2
import numpy as np


IMAGE_EXTENSIONS = ('.png', '.ppm', '.jpg', '.jpeg')


def read_image(path):
    """Read an RGB image as ``[3, H, W]`` float64 in ``[0, 1]``."""
    data = cv2.imread(path, cv2.IMREAD_COLOR)
    if data is None:
        msg = 'Unable to read image {0}'
        raise DataException(msg.format(path))

    data = cv2.cvtColor(data, cv2.COLOR_BGR2RGB)

    return data.transpose(2, 0, 1).astype(np.float64) / 255.0


def write_image(path, img):
    """Write ``[3, H, W]`` in ``[0, 1]`` as an 8 bit image."""
    img = np.clip(np.asarray(img, dtype=np.float64), 0.0, 1.0)
    data = np.round(img.transpose(1, 2, 0) * 255.0).astype(np.uint8)

    if not cv2.imwrite(path, cv2.cvtColor(data, cv2.COLOR_RGB2BGR)):
        msg = 'Unable to write image {0}'
        raise DataException(msg.format(path))

    logger.debug('Wrote image {0}'.format(path))

    return path


class ImageDirectory(object):

    """Images of a directory in sorted file name order.

       Only files with a known image extension are listed; images are
       read on access.
    """

    def __init__(self, path, extensions=IMAGE_EXTENSIONS):
        if not os.path.isdir(path):
            msg = 'Not a directory: {0}'
            raise DataException(msg.format(path))

        self.path = path
        self.names = sorted(name for name in os.listdir(path)
                            if os.path.splitext(name)[1].lower() in
                            extensions)
        if not self.names:
            msg = 'No images found in {0}'
            raise DataException(msg.format(path))

        logger.info('Found {0} images in {1}'.format(len(self.names), path))

    def __len__(self):
        return len(self.names)

    def __getitem__(self, index):
        return read_image(os.path.join(self.path, self.names[index]))

    def __repr__(self):
        template = '<ImageDirectory({0},{1} images) object at {2}>'
        return template.format(self.path, len(self.names), hex(id(self)))


from framer.util import DataException
from framer.data import logger
