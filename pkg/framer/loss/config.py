# coding: utf-8

# framer/loss/config.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from dataclasses import dataclass

from framer.util import Section, ConfigException


@dataclass
class LossConfig(Section):

    """Toggles of the self-distillation objective.

       ``lf_loss``/``hf_loss`` pick the contrastive form applied to each
       band (``intra``, ``inter`` or ``none``). ``teacher`` selects the
       reference layer, ``negative`` the layer negative.
    """

    use_framer: bool = True
    use_faw: bool = True
    use_fam: bool = True
    lf_loss: str = 'intra'
    hf_loss: str = 'inter'
    objective: str = 'cl_freq'
    teacher: str = 'final'
    negative: str = 'random_layer'
    detach_teacher: bool = False
    redraw_per_branch: bool = False
    temperature: float = 1.0
    radius: float = 0.2

    def validate(self):
        self.lf_loss = band_losses.cast(self.lf_loss).name
        self.hf_loss = band_losses.cast(self.hf_loss).name
        self.objective = objectives.cast(self.objective).name
        self.teacher = teachers.cast(self.teacher).name
        self.negative = negatives.cast(self.negative).name

        if not self.temperature > 0:
            msg = 'temperature must be positive, got {0}'
            raise ConfigException(msg.format(self.temperature))
        if not 0 < self.radius < 1:
            msg = 'radius must lie in (0, 1), got {0}'
            raise ConfigException(msg.format(self.radius))

        return self


from framer.loss.enum import band_losses, objectives, teachers, negatives
