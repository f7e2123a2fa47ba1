# coding: utf-8

# framer/diffusion/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Pixel space forward process, noise objective and samplers.

   Nothing here depends on the self-distillation losses, so sampling runs
   identically for models trained with or without them.
"""

from logging import getLogger


logger = getLogger('framer.diffusion')


from framer.diffusion.enum import schedules, samplers
from framer.diffusion.schedule import ScheduleConfig, NoiseSchedule
from framer.diffusion.process import q_sample, noise_loss
from framer.diffusion.sampler import (sample, ddim_step,
                                      timestep_sequence)

__all__ = ['schedules', 'samplers', 'ScheduleConfig', 'NoiseSchedule',
           'q_sample', 'noise_loss', 'sample', 'ddim_step',
           'timestep_sequence']
