#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
解析管线与暴力截断 Fock 模拟的一致性检查

逐项计算最大绝对偏差，与容差比较后汇总成报告表。
"""

import math
import logging
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

import numpy as np
import pandas as pd
from scipy.special import eval_legendre

from src.interferometry.legendre import legendre_table
from src.interferometry.parity_signal import parity_curve
from src.oracle.coherent_oracle import coherent_oracle_signal
from src.oracle.fock_lattice import OracleState
from src.oracle.unitaries import apply_two_mode_squeeze, oracle_parity_curve, suggest_cutoff
from src.polarization.coherent_signals import (
    PolarizedCoherentInput, coherent_parity, parity_signal_circular, parity_signal_linear,
    propagate_output_amplitudes,
)
from src.polarization.rotation import RotationConfig
from src.states.tsb_state import TsbParams, squeezed_number_coefficients, tsb_coefficients
from src.utils.exceptions import InvalidSweepSpec

logger = logging.getLogger(__name__)

COEFF_DELTAS = (0.0, math.pi / 10, math.pi / 4, math.pi / 3, math.pi / 2)
COEFF_RS = (0.5, 1.0, 1.25)
COEFF_ORDERS = 10
SIGNAL_DELTAS = (0.0, math.pi / 10, math.pi / 4, math.pi / 2)
SIGNAL_RS = (0.5, 1.0)
SIGNAL_ELLS = (1, 3)
SIGNAL_PHIS = np.linspace(0.0, math.pi / 2, 64)


@lru_cache(maxsize=8)
def _squeezed_inputs(r: float) -> Tuple[OracleState, OracleState]:
    """S(r)|0,0⟩ 与 S(r)|1,1⟩"""
    cutoff = suggest_cutoff(r)
    vac = apply_two_mode_squeeze(OracleState.vacuum(cutoff), r)
    pair = apply_two_mode_squeeze(OracleState.fock(1, 1, cutoff), r)
    return vac, pair


def _squeezed_tsb(r: float, delta: float) -> OracleState:
    vac, pair = _squeezed_inputs(r)
    amps = math.cos(delta) * vac.amps + math.sin(delta) * pair.amps
    return OracleState(amps, vac.n_max_total, leakage=max(vac.leakage, pair.leakage))


def check_tsb_coefficients() -> float:
    worst = 0.0
    for r in COEFF_RS:
        for delta in COEFF_DELTAS:
            analytic = tsb_coefficients(TsbParams(r, delta)).coeffs[:COEFF_ORDERS + 1]
            oracle = _squeezed_tsb(r, delta).diagonal()[:COEFF_ORDERS + 1]
            worst = max(worst, float(np.max(np.abs(oracle - analytic))))
    return worst


def check_squeezed_number() -> float:
    worst = 0.0
    for r in COEFF_RS:
        analytic = squeezed_number_coefficients(r).coeffs[:COEFF_ORDERS + 1]
        oracle = _squeezed_inputs(r)[1].diagonal()[:COEFF_ORDERS + 1]
        worst = max(worst, float(np.max(np.abs(oracle - analytic))))
    return worst


def check_parity_signal() -> float:
    worst = 0.0
    for r in SIGNAL_RS:
        for delta in SIGNAL_DELTAS:
            state = tsb_coefficients(TsbParams(r, delta))
            lattice = _squeezed_tsb(r, delta)
            for ell in SIGNAL_ELLS:
                analytic = parity_curve(state, ell, SIGNAL_PHIS)
                oracle = oracle_parity_curve(lattice, ell, SIGNAL_PHIS)
                worst = max(worst, float(np.max(np.abs(oracle - analytic))))
    return worst


def check_headline_tsb() -> float:
    """TSB(r=1, δ=π/3) 从 cosδ|0,0⟩+sinδ|1,1⟩ 出发完整走一遍格点模拟"""
    r, delta = 1.0, math.pi / 3
    lattice = apply_two_mode_squeeze(OracleState.tsb_input(delta, suggest_cutoff(r)), r)
    state = tsb_coefficients(TsbParams(r, delta))
    analytic = parity_curve(state, 1, SIGNAL_PHIS)
    oracle = oracle_parity_curve(lattice, 1, SIGNAL_PHIS)
    return float(np.max(np.abs(oracle - analytic)))


def check_amplitude_propagation(samples: int = 200, seed: int = 7) -> float:
    """闭式信号与输出振幅的奇偶恒等式"""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        cfg = RotationConfig(int(rng.integers(0, 5)), float(rng.uniform(-math.pi, math.pi)))
        nc = float(rng.uniform(0.0, 10.0))
        linear = coherent_parity(propagate_output_amplitudes(PolarizedCoherentInput.linear(nc), cfg))
        circular = coherent_parity(propagate_output_amplitudes(PolarizedCoherentInput.circular(nc), cfg))
        worst = max(worst,
                    abs(linear - parity_signal_linear(nc, cfg)),
                    abs(circular - parity_signal_circular(nc, cfg)))
    return worst


def check_coherent_oracle(nc: float = 3.0, n_max: int = 40) -> float:
    worst = 0.0
    for ell in (1, 2):
        for phi in np.linspace(0.0, math.pi, 33):
            cfg = RotationConfig(ell, float(phi))
            lp = coherent_oracle_signal(PolarizedCoherentInput.linear(nc), cfg, n_max)
            cp = coherent_oracle_signal(PolarizedCoherentInput.circular(nc), cfg, n_max)
            worst = max(worst,
                        abs(lp - parity_signal_linear(nc, cfg)),
                        abs(cp - parity_signal_circular(nc, cfg)))
    return worst


def check_legendre(n_max: int = 64) -> float:
    x = np.linspace(-1.0, 1.0, 101)
    table = legendre_table(n_max, x)
    reference = np.array([eval_legendre(n, x) for n in range(n_max + 1)])
    return float(np.max(np.abs(table - reference)))


CHECKS: List[Tuple[str, Callable[[], float]]] = [
    ('tsb_coefficients_vs_squeeze', check_tsb_coefficients),
    ('squeezed_number_vs_squeeze', check_squeezed_number),
    ('parity_signal_vs_interferometer', check_parity_signal),
    ('tsb_r1_pi3_end_to_end', check_headline_tsb),
    ('coherent_closed_form_vs_amplitudes', check_amplitude_propagation),
    ('coherent_closed_form_vs_fock', check_coherent_oracle),
    ('legendre_vs_scipy', check_legendre),
]


def run_oracle_check(tolerance: float) -> Tuple[bool, pd.DataFrame]:
    """
    运行全部一致性检查

    Args:
        tolerance: 最大允许绝对偏差

    Returns:
        (是否全部通过, 报告表 check / max_abs_deviation / tolerance / passed)
    """
    if not tolerance > 0:
        raise InvalidSweepSpec('tolerance', f"容差必须为正, 收到 {tolerance}", tolerance)
    rows: List[Dict[str, object]] = []
    for name, check in CHECKS:
        deviation = check()
        passed = deviation <= tolerance
        rows.append({'check': name, 'max_abs_deviation': deviation,
                     'tolerance': tolerance, 'passed': passed})
        level = logging.INFO if passed else logging.WARNING
        logger.log(level, f"{name}: 最大偏差 {deviation:.3e} ({'通过' if passed else '未通过'})")
    report = pd.DataFrame(rows, columns=['check', 'max_abs_deviation', 'tolerance', 'passed'])
    return bool(report['passed'].all()), report
