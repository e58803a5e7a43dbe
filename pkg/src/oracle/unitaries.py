#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
截断格点上的幺正变换

1. 双模压缩 exp[r(ab − a†b†)]：稀疏生成元 + expm_multiply
2. 50:50 分束器 exp[iπ/4(a†b + ab†)]：按总光子数壳层分块的稠密矩阵指数
3. 路径 A 上的相移 exp[iθ n_A]
4. 路径 A 的奇偶 Σ(−1)^j |amp|²
"""

import math
import logging
from functools import lru_cache
from typing import List, Optional

import numpy as np
from scipy import sparse
from scipy.linalg import expm
from scipy.sparse.linalg import expm_multiply

from config.config import ORACLE_CONFIG
from src.oracle.fock_lattice import (
    OracleState, lattice_index, lattice_modes, lattice_size, shell_slice,
)
from src.polarization.rotation import RotationConfig
from src.states.tsb_state import select_cutoff
from src.utils.exceptions import LeakageExceeded

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def squeeze_generator(cutoff: int) -> sparse.csr_matrix:
    """生成元 ab − a†b†，截断后仍为实反对称矩阵"""
    j, k = lattice_modes(cutoff)
    rows, cols, vals = [], [], []
    for idx, (jj, kk) in enumerate(zip(j.tolist(), k.tolist())):
        if jj + kk + 2 <= cutoff:
            target = lattice_index(jj + 1, kk + 1)
            weight = math.sqrt((jj + 1) * (kk + 1))
            # a†b† 项
            rows.append(target)
            cols.append(idx)
            vals.append(-weight)
            # ab 项
            rows.append(idx)
            cols.append(target)
            vals.append(weight)
    size = lattice_size(cutoff)
    return sparse.coo_matrix((vals, (rows, cols)), shape=(size, size)).tocsr()


@lru_cache(maxsize=8)
def beam_splitter_blocks(cutoff: int) -> List[np.ndarray]:
    """每个壳层 s 上的 exp[iπ/4·H_s]，H_s[j+1, j] = √((j+1)(s−j))"""
    blocks = []
    for s in range(cutoff + 1):
        hop = np.sqrt(np.arange(1, s + 1) * np.arange(s, 0, -1), dtype=float)
        h = np.diag(hop, -1) + np.diag(hop, 1)
        blocks.append(expm(1j * math.pi / 4.0 * h))
    logger.debug(f"构建分束器分块矩阵, 截断 N={cutoff}")
    return blocks


def suggest_cutoff(r: float, eps: Optional[float] = None) -> int:
    """
    使压缩后边界壳层概率远低于 eps 的格点截断

    孪生Fock尾界取 eps 的平方，以免边界反射影响内部振幅。
    """
    eps = ORACLE_CONFIG['leak_threshold'] if eps is None else eps
    n_max, _ = select_cutoff(r, max(eps * eps, 1e-300))
    return min(ORACLE_CONFIG['max_cutoff'], 2 * n_max + 4)


def apply_two_mode_squeeze(state: OracleState, r: float,
                           leak_threshold: Optional[float] = None) -> OracleState:
    """
    施加 exp[r(ab − a†b†)]

    截断生成元保持反对称，概率不会消失而是堆积在截断边界，
    因此泄漏取最外层壳层概率与范数亏损之和。

    Raises:
        LeakageExceeded: 泄漏超过阈值
    """
    threshold = ORACLE_CONFIG['leak_threshold'] if leak_threshold is None else leak_threshold
    if r == 0:
        return state
    generator = squeeze_generator(state.n_max_total)
    amps = expm_multiply(r * generator, state.amps.astype(complex))

    squeezed = OracleState(amps, state.n_max_total)
    boundary = squeezed.shell_mass(ORACLE_CONFIG['boundary_shells'])
    leakage = state.leakage + boundary + max(0.0, state.norm - squeezed.norm)
    if leakage > threshold:
        raise LeakageExceeded(
            f"r={r} 截断 N={state.n_max_total} 时泄漏 {leakage:.3e} 超过阈值 {threshold:.1e}")
    logger.debug(f"压缩 r={r}, 截断 N={state.n_max_total}, 泄漏 {leakage:.3e}")
    return OracleState(amps, state.n_max_total, leakage=leakage)


def apply_beam_splitter(state: OracleState) -> OracleState:
    """对称 50:50 分束器，反射臂带相位 i"""
    amps = np.empty_like(state.amps)
    for s, block in enumerate(beam_splitter_blocks(state.n_max_total)):
        sl = shell_slice(s)
        amps[sl] = block @ state.amps[sl]
    return OracleState(amps, state.n_max_total, leakage=state.leakage)


def apply_phase(state: OracleState, theta: float) -> OracleState:
    """路径 A 相移 exp[iθ n_A]"""
    j, _ = lattice_modes(state.n_max_total)
    return OracleState(state.amps * np.exp(1j * theta * j), state.n_max_total, leakage=state.leakage)


def apply_interferometer(state: OracleState, cfg: RotationConfig) -> OracleState:
    """分束器 → 路径 A 相移 2(ℓ+1)φ → 分束器"""
    theta = 2.0 * cfg.angular_gain * cfg.phi
    return apply_beam_splitter(apply_phase(apply_beam_splitter(state), theta))


def parity_of(state: OracleState) -> float:
    """Π_A = exp(iπ n_A) 的期望"""
    j, _ = lattice_modes(state.n_max_total)
    signs = np.where(j % 2 == 0, 1.0, -1.0)
    return float(np.sum(signs * np.abs(state.amps) ** 2))


def oracle_parity_curve(state: OracleState, ell: int, phis, handedness: int = 1) -> np.ndarray:
    """多个 φ 上干涉仪输出的奇偶，第一个分束器只计算一次"""
    gain = RotationConfig(ell, 0.0, handedness).angular_gain
    split = apply_beam_splitter(state)
    return np.array([parity_of(apply_beam_splitter(apply_phase(split, 2.0 * gain * phi)))
                     for phi in np.asarray(phis, dtype=float)])
