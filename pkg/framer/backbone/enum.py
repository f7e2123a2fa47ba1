# coding: utf-8

# framer/backbone/enum.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from framer.lazyenum import enum


kinds = enum('backbone', ('dit_like', 'unet_like'))
