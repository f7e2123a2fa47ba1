# coding: utf-8

# framer/loss/enum.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from framer.lazyenum import enum


band_losses = enum('band_loss', ('intra', 'inter', 'none'))
objectives = enum('objective', ('cl_freq', 'mse', 'mse_freq'))
teachers = enum('teacher', ('final', 'final_1', 'final_2', 'random'))
negatives = enum('negative', ('random_layer', 'previous_layer'))
