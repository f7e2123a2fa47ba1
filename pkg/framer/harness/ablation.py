# coding: utf-8

# framer/harness/ablation.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

from collections import namedtuple, OrderedDict
import os

import numpy as np


def _bands(lf, hf):
    return {'lf_loss': lf, 'hf_loss': hf}


#: loss section overrides of every named variant
VARIANTS = OrderedDict([
    ('baseline', {'use_framer': False}),
    ('mse_distill', {'objective': 'mse'}),
    ('mse_freq_distill', {'objective': 'mse_freq'}),
    ('cl_freq_distill', {'objective': 'cl_freq'}),
    ('teacher_random', {'teacher': 'random'}),
    ('teacher_final_1', {'teacher': 'final_1'}),
    ('teacher_final_2', {'teacher': 'final_2'}),
    ('negative_previous', {'negative': 'previous_layer'}),
    ('A', _bands('intra', 'none')),
    ('B', _bands('inter', 'none')),
    ('C', _bands('none', 'intra')),
    ('D', _bands('none', 'inter')),
    ('E', _bands('inter', 'intra')),
    ('F', _bands('inter', 'inter')),
    ('G', _bands('intra', 'intra')),
    ('H', _bands('intra', 'inter')),
    ('cl_only', {'use_faw': False, 'use_fam': False}),
    ('faw_only', {'use_faw': True, 'use_fam': False}),
    ('fam_only', {'use_faw': False, 'use_fam': True}),
    ('faw_fam', {'use_faw': True, 'use_fam': True}),
])

#: variants run by each ablation table
TABLES = OrderedDict([
    ('objective', ('baseline', 'mse_distill', 'mse_freq_distill',
                   'cl_freq_distill')),
    ('components', ('teacher_random', 'teacher_final_1', 'teacher_final_2',
                    'negative_previous', 'cl_freq_distill')),
    ('bands', ('baseline', 'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H')),
    ('adaptive', ('baseline', 'cl_only', 'faw_only', 'fam_only', 'faw_fam')),
])

ABLATION_COLUMNS = ('variant', 'noise_loss', 'mid_cos_hf', 'mid_cos_lf',
                    'psnr', 'ssim')


class AblationRow(namedtuple('AblationRow', ABLATION_COLUMNS)):
    pass


def table_variants(table):
    """Variant names of ``table``, ``all`` runs every variant once."""
    if table == 'all':
        return tuple(VARIANTS)
    if table not in TABLES:
        msg = "Unknown ablation table '{0}', expected one of {1}"
        raise ConfigException(msg.format(table, ', '.join(
            list(TABLES) + ['all'])))

    return TABLES[table]


def variant_config(base, name, output=None):
    """``base`` with the loss overrides of variant ``name`` applied."""
    if name not in VARIANTS:
        msg = "Unknown variant '{0}'"
        raise ConfigException(msg.format(name))

    values = merge(base.to_dict(), {'loss': VARIANTS[name]})
    if output is not None:
        values['output'] = output

    return TrainConfig.from_dict(values)


def summarize(name, result):
    psnr = [m.psnr for m in result.metrics]
    ssim = [m.ssim for m in result.metrics]

    return AblationRow(name, result.final['noise'],
                       mid_layer_mean(result.curves, 'hf'),
                       mid_layer_mean(result.curves, 'lf'),
                       float(np.mean(psnr)) if psnr else float('nan'),
                       float(np.mean(ssim)) if ssim else float('nan'))


def run_ablation_suite(base, table='adaptive', output=None, images=None):
    """Train every variant of ``table`` from the same seed.

       Each variant writes its run into ``<output>/<variant>``; the
       comparison is written to ``<output>/ablation.csv``.

       :rtype: list of :class:`AblationRow`
    """
    output = output or base.output
    names = table_variants(table)
    logger.info('Running {0} ablation variants into {1}'.format(len(names),
                                                              output))

    rows = []
    for name in names:
        config = variant_config(base, name, os.path.join(output, name))
        logger.info('Variant {0}'.format(name))
        rows.append(summarize(name, train(config, images)))

    if not os.path.isdir(output):
        os.makedirs(output)
    write_rows(os.path.join(output, 'ablation.csv'), ABLATION_COLUMNS, rows)

    return rows


from framer.util import ConfigException
from framer.analysis import mid_layer_mean
from framer.analysis.output import write_rows
from framer.harness import logger
from framer.harness.config import TrainConfig, merge
from framer.harness.train import train
