# coding: utf-8

# framer/diffusion/enum.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from framer.lazyenum import enum


schedules = enum('schedule', ('linear', 'cosine'))
samplers = enum('sampler', ('ddpm', 'ddim'))
