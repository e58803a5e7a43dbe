#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
TSB 态奇偶检测信号与误差传播灵敏度

⟨Π⟩ = Σ G(n)² P_n(−cos θ)，θ = 4(ℓ+1)φ
Δφ = √(1 − ⟨Π⟩²) / |∂⟨Π⟩/∂φ|

曲线函数对 φ 数组整体计算，标量接口是其单点包装。
"""

import math
import logging
from typing import Tuple

import numpy as np

from config.config import SENSITIVITY_CONFIG
from src.interferometry.legendre import legendre_offset_table
from src.polarization.rotation import RotationConfig
from src.states.tsb_state import TwinFockState, factorial_moment
from src.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def _signal_terms(state: TwinFockState, gain: int,
                  phis: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    计算信号、1 − 信号、导数以及驻点掩码

    x = −cosθ ≥ 0 时用 y = 1 − x = 2cos²(θ/2)；x < 0 时利用 P_n(−z) = (−1)^n P_n(z)，
    y = 1 + x = 2sin²(θ/2)。两种情况下 y 都不经过相减得到。
    """
    phis = np.asarray(phis, dtype=float)
    theta = 4.0 * gain * phis
    half = 2.0 * gain * phis
    cos_theta = np.cos(theta)
    near_peak = cos_theta <= 0.0
    y = np.where(near_peak, 2.0 * np.cos(half) ** 2, 2.0 * np.sin(half) ** 2)
    y = np.clip(y, 0.0, 1.0)

    # 截断态按 ΣG² 归一，峰处的 1 − ⟨Π⟩ 不含舍入残差
    weights = state.probabilities / state.norm
    values, derivs, one_minus = legendre_offset_table(state.n_max, y)
    alternating = np.where(np.arange(state.n_max + 1) % 2 == 0, 1.0, -1.0)

    deficit_near = weights @ one_minus
    signal_near = 1.0 - deficit_near
    signal_far = (weights * alternating) @ values
    slope_near = weights @ derivs
    slope_far = -(weights * alternating) @ derivs

    signal = np.clip(np.where(near_peak, signal_near, signal_far), -1.0, 1.0)
    deficit = np.where(near_peak, deficit_near, 1.0 - signal_far)
    deficit = np.clip(deficit, 0.0, 2.0)
    sin_theta = np.sin(theta)
    slope = np.where(near_peak, slope_near, slope_far) * sin_theta * 4.0 * gain

    # θ 为 π 的整数倍（舍入意义下）时为信号驻点
    stationary = np.abs(sin_theta) <= 8.0 * np.spacing(np.maximum(np.abs(theta), 1.0))
    return signal, deficit, slope, stationary


def parity_curve(state: TwinFockState, ell: int, phis, handedness: int = 1) -> np.ndarray:
    """⟨Π⟩ 在一组角位移上的取值"""
    gain = RotationConfig(ell, 0.0, handedness).angular_gain
    return _signal_terms(state, gain, phis)[0]


def parity_derivative_curve(state: TwinFockState, ell: int, phis, handedness: int = 1) -> np.ndarray:
    """∂⟨Π⟩/∂φ，链式法则 Σ G²·P'_n(−cosθ)·sinθ·4(ℓ+1)"""
    gain = RotationConfig(ell, 0.0, handedness).angular_gain
    return _signal_terms(state, gain, phis)[2]


def sensitivity_curve(state: TwinFockState, ell: int, phis, handedness: int = 1,
                      derivative_guard: float = None) -> np.ndarray:
    """
    误差传播灵敏度，驻点与导数过小处记为 +inf

    分子用 √[(1−⟨Π⟩)(1+⟨Π⟩)] 计算，峰附近的 1−⟨Π⟩ 来自偏移递推。
    """
    guard = SENSITIVITY_CONFIG['derivative_guard'] if derivative_guard is None else derivative_guard
    gain = RotationConfig(ell, 0.0, handedness).angular_gain
    signal, deficit, slope, stationary = _signal_terms(state, gain, phis)

    numerator = np.sqrt(deficit * (1.0 + signal))
    magnitude = np.abs(slope)
    singular = stationary | (magnitude < guard)
    with np.errstate(divide='ignore', invalid='ignore'):
        result = np.where(singular, np.inf, numerator / np.where(singular, 1.0, magnitude))
    return result


def parity_expectation(state: TwinFockState, cfg: RotationConfig) -> float:
    """Σ G(n)²·P_n(−cos[4(ℓ+1)φ])"""
    return float(parity_curve(state, cfg.ell, [cfg.phi], cfg.handedness)[0])


def parity_derivative(state: TwinFockState, cfg: RotationConfig) -> float:
    return float(parity_derivative_curve(state, cfg.ell, [cfg.phi], cfg.handedness)[0])


def sensitivity(state: TwinFockState, cfg: RotationConfig) -> float:
    """单点灵敏度 Δφ，驻点返回 math.inf"""
    return float(sensitivity_curve(state, cfg.ell, [cfg.phi], cfg.handedness)[0])


def heisenberg_limit(n_mean: float, ell: int) -> float:
    """海森堡极限 1/[2(ℓ+1)·N̄]"""
    if not math.isfinite(n_mean) or n_mean <= 0:
        raise DomainError(f"平均光子数必须为正, 收到 n_mean={n_mean}")
    RotationConfig(ell)
    return 1.0 / (2.0 * (ell + 1) * n_mean)


def peak_sensitivity_limit(state: TwinFockState, ell: int, handedness: int = 1) -> float:
    """
    信号峰处 Δφ 的极限 1/[2(ℓ+1)·√(2·Σ n(n+1)G²)]

    δ=0 时等于 1/[2(ℓ+1)·√(N̄(N̄+2))]。
    """
    gain = abs(RotationConfig(ell, 0.0, handedness).angular_gain)
    moment = factorial_moment(state)
    if gain == 0 or moment <= 0:
        return math.inf
    return 1.0 / (2.0 * gain * math.sqrt(2.0 * moment))
