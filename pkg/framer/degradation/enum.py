# coding: utf-8

# framer/degradation/enum.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from framer.lazyenum import enum


kernel_kinds = enum('kernel', ('iso', 'aniso', 'generalized_iso',
                               'generalized_aniso', 'plateau_iso',
                               'plateau_aniso', 'sinc'))
resize_modes = enum('resize_mode', ('area', 'bilinear', 'bicubic'))
directions = enum('direction', ('up', 'down', 'keep'))
