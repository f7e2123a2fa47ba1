# coding: utf-8

# framer/harness/__init__.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

"""Training runs, ablations and their configuration.

   >>> config = load_config('example.yaml', ['loss.use_fam=false'])
   >>> result = train(config)
   >>> result.final['total']
"""

from logging import getLogger
import os


logger = getLogger('framer.harness')

#: fully annotated configuration shipped with the package
EXAMPLE_CONFIG = os.path.join(os.path.dirname(__file__), 'example.yaml')


from framer.harness.config import (TrainConfig, load_config, load_mapping,
                                   dump_config, parse_override, merge)
from framer.harness.optim import Adam
from framer.harness.train import (RunResult, Trainer, train, evaluate,
                                  evaluation_pairs, restore, to_model,
                                  from_model)
from framer.harness.ablation import (VARIANTS, TABLES, AblationRow,
                                     table_variants, variant_config,
                                     run_ablation_suite)

__all__ = ['EXAMPLE_CONFIG', 'TrainConfig', 'load_config', 'load_mapping',
           'dump_config', 'parse_override', 'merge', 'Adam', 'RunResult',
           'Trainer', 'train', 'evaluate', 'evaluation_pairs', 'restore',
           'to_model', 'from_model', 'VARIANTS', 'TABLES', 'AblationRow',
           'table_variants', 'variant_config', 'run_ablation_suite']
