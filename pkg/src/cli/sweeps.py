#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
扫描命令的数据生成

每个网格点是独立的纯函数任务，workers > 1 时交给进程池并行，
结果按网格顺序收集成 DataFrame。
"""

import math
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Sequence, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from config.config import SWEEP_CONFIG
from src.cli.sweep_spec import SweepSpec
from src.interferometry.parity_signal import parity_curve, sensitivity_curve
from src.interferometry.resolution_metrics import resolution_metrics, sample_signal_curve
from src.interferometry.sensitivity_optimizer import optimal_sensitivity
from src.polarization.coherent_signals import coherent_signal_curve
from src.states.tsb_state import TsbParams, squeezed_number_coefficients, tsb_coefficients

logger = logging.getLogger(__name__)

SIGNAL_COLUMNS = ['source', 'r', 'delta_rad', 'ell', 'nc', 'phi_rad']
SURFACE_COLUMNS = ['r', 'delta_rad', 'ell', 'mean_photon_number', 'phi_opt_rad',
                   'delta_phi_opt_rad', 'hl_rad', 'hl_minus_delta_phi_rad']
TMSN_COLUMNS = ['r', 'ell', 'mean_photon_number', 'visibility', 'fwhm_rad', 'peak_count',
                'delta_phi_opt_rad', 'hl_rad', 'delta_phi_opt_over_hl']


def run_grid(func: Callable, tasks: Sequence, workers: int, desc: str) -> List[Any]:
    """按顺序计算全部任务，workers > 1 时使用进程池"""
    show = SWEEP_CONFIG['progress'] and sys.stderr.isatty()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(tqdm(executor.map(func, tasks), total=len(tasks), desc=desc, disable=not show))
    return [func(task) for task in tqdm(tasks, desc=desc, disable=not show)]


def _signal_task(task: Tuple) -> List[Dict[str, Any]]:
    source, r, delta, ell, nc, handedness, eps, quantity, phis = task
    phis = np.asarray(phis, dtype=float)
    if source == 'tsb':
        state = tsb_coefficients(TsbParams(r, delta), eps)
        if quantity == 'sensitivity':
            values = sensitivity_curve(state, ell, phis, handedness)
        else:
            values = parity_curve(state, ell, phis, handedness)
        r_col, delta_col, nc_col = r, delta, math.nan
    else:
        values = coherent_signal_curve(source, nc, ell, phis, handedness)
        r_col, delta_col, nc_col = math.nan, math.nan, nc

    value_col = 'delta_phi_rad' if quantity == 'sensitivity' else 'signal'
    return [{'source': source, 'r': r_col, 'delta_rad': delta_col, 'ell': ell, 'nc': nc_col,
             'phi_rad': float(phi), value_col: float(value)}
            for phi, value in zip(phis, values)]


def cmd_signal(spec: SweepSpec) -> pd.DataFrame:
    """
    奇偶信号或灵敏度随角位移的曲线

    每个 (来源, r, δ) 组合输出一条曲线，列为 source, r, delta_rad, ell, nc, phi_rad 与 signal/delta_phi_rad。
    """
    spec.require_swept('phi')
    phis = tuple(spec.phi_values.tolist())
    tasks = []
    for source in spec.sources:
        if source == 'tsb':
            for r in spec.r_values:
                for delta in spec.delta_grid:
                    tasks.append((source, float(r), float(delta), spec.ell, spec.nc,
                                  spec.handedness, spec.eps_trunc, spec.quantity, phis))
        else:
            tasks.append((source, math.nan, math.nan, spec.ell, spec.nc,
                          spec.handedness, spec.eps_trunc, spec.quantity, phis))

    logger.info(f"信号扫描: {len(tasks)} 条曲线, 每条 {len(phis)} 个点")
    rows = [row for chunk in run_grid(_signal_task, tasks, spec.workers, 'signal') for row in chunk]
    value_col = 'delta_phi_rad' if spec.quantity == 'sensitivity' else 'signal'
    return pd.DataFrame(rows, columns=SIGNAL_COLUMNS + [value_col])


def _surface_task(task: Tuple) -> Dict[str, Any]:
    r, delta, ell, handedness, eps = task
    state = tsb_coefficients(TsbParams(r, delta), eps)
    report = optimal_sensitivity(state, ell, handedness=handedness)
    return {
        'r': r,
        'delta_rad': delta,
        'ell': ell,
        'mean_photon_number': report.mean_photon_number,
        'phi_opt_rad': report.phi_opt,
        'delta_phi_opt_rad': report.delta_phi_opt,
        'hl_rad': report.heisenberg_limit,
        'hl_minus_delta_phi_rad': report.difference,
    }


def cmd_sensitivity_surface(spec: SweepSpec) -> pd.DataFrame:
    """(r, δ) 网格上的最优灵敏度与海森堡极限之差"""
    spec.require_swept('r', 'delta')
    tasks = [(float(r), float(delta), spec.ell, spec.handedness, spec.eps_trunc)
             for r in spec.r_values for delta in spec.delta_grid]
    logger.info(f"灵敏度曲面: {len(tasks)} 个网格点, ell={spec.ell}")
    rows = run_grid(_surface_task, tasks, spec.workers, 'surface')
    return pd.DataFrame(rows, columns=SURFACE_COLUMNS)


def _tmsn_task(task: Tuple) -> Dict[str, Any]:
    r, ell, handedness, eps = task
    state = squeezed_number_coefficients(r, eps)
    metrics = resolution_metrics(sample_signal_curve(state, ell, handedness=handedness))
    report = optimal_sensitivity(state, ell, handedness=handedness)
    return {
        'r': r,
        'ell': ell,
        'mean_photon_number': report.mean_photon_number,
        'visibility': metrics.visibility,
        'fwhm_rad': metrics.fwhm,
        'peak_count': metrics.peak_count,
        'delta_phi_opt_rad': report.delta_phi_opt,
        'hl_rad': report.heisenberg_limit,
        'delta_phi_opt_over_hl': report.delta_phi_opt / report.heisenberg_limit,
    }


def cmd_tmsn(spec: SweepSpec) -> pd.DataFrame:
    """双模压缩数态 (δ=π/2) 的可见度、FWHM、最优灵敏度与 HL 随 r 的变化"""
    spec.require_swept('r')
    tasks = [(float(r), spec.ell, spec.handedness, spec.eps_trunc) for r in spec.r_values]
    logger.info(f"TMSN 扫描: {len(tasks)} 个 r 值, ell={spec.ell}")
    rows = run_grid(_tmsn_task, tasks, spec.workers, 'tmsn')
    return pd.DataFrame(rows, columns=TMSN_COLUMNS)
