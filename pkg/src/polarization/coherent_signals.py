#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
偏振相干态输入的传播与奇偶检测信号

相干态经第一个分束器、旋转装置和第二个分束器后，路径 A 的输出
仍为两偏振模上的相干态，其振幅由闭式给出。相干态奇偶期望满足
⟨γ|Π|γ⟩ = exp(−2|γ|²)，对两偏振模取乘积即得线偏振/圆偏振信号。
"""

import cmath
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from src.polarization.rotation import RotationConfig
from src.utils.exceptions import DomainError


@dataclass(frozen=True)
class PolarizedCoherentInput:
    """路径 A 的偏振相干输入 |α⟩_H |β e^{iφ}⟩_V"""
    alpha: complex
    beta: complex
    varphi: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.nc):
            raise DomainError(f"平均光子数必须有限, 收到 |α|²+|β|²={self.nc}")

    @property
    def nc(self) -> float:
        """平均光子数 N_C = |α|² + |β|²"""
        return abs(self.alpha) ** 2 + abs(self.beta) ** 2

    @classmethod
    def linear(cls, nc: float) -> 'PolarizedCoherentInput':
        """线偏振：|α|² = N_C, β = 0"""
        _check_nc(nc)
        return cls(alpha=math.sqrt(nc), beta=0.0, varphi=0.0)

    @classmethod
    def circular(cls, nc: float, handedness: int = 1) -> 'PolarizedCoherentInput':
        """圆偏振：|α|² = |β|² = N_C/2, varphi = −handedness·π/2"""
        _check_nc(nc)
        if handedness not in (1, -1):
            raise DomainError(f"旋向 handedness 只能取 ±1, 收到 {handedness}")
        amp = math.sqrt(nc / 2.0)
        return cls(alpha=amp, beta=amp, varphi=-handedness * math.pi / 2)


def _check_nc(nc: float):
    if not math.isfinite(nc) or nc < 0:
        raise DomainError(f"平均光子数 nc 必须为非负有限数, 收到 nc={nc}")


def propagate_output_amplitudes(inp: PolarizedCoherentInput,
                                cfg: RotationConfig) -> Tuple[complex, complex]:
    """
    路径 A 输出的 H、V 模相干振幅

    H = e^{i2ℓφ}/2·[α cos2φ − βe^{iφ} sin2φ] − α/2
    V = e^{i2ℓφ}/2·[α sin2φ + βe^{iφ} cos2φ] − βe^{iφ}/2

    旋向只通过输入相位 varphi 体现，此处 ℓ 取非负值。
    """
    phase = cmath.exp(2j * cfg.ell * cfg.phi)
    beta_v = inp.beta * cmath.exp(1j * inp.varphi)
    cos2, sin2 = math.cos(2.0 * cfg.phi), math.sin(2.0 * cfg.phi)

    out_h = phase / 2.0 * (inp.alpha * cos2 - beta_v * sin2) - inp.alpha / 2.0
    out_v = phase / 2.0 * (inp.alpha * sin2 + beta_v * cos2) - beta_v / 2.0
    return complex(out_h), complex(out_v)


def coherent_parity(amplitudes: Sequence[complex]) -> float:
    """多模相干态奇偶期望 exp(−2·Σ|γ|²)"""
    return math.exp(-2.0 * sum(abs(g) ** 2 for g in amplitudes))


def parity_signal_linear(nc: float, cfg: RotationConfig) -> float:
    """线偏振信号 exp{−N_C[1 − cos2φ·cos2ℓφ]}"""
    _check_nc(nc)
    return math.exp(-nc * (1.0 - math.cos(2.0 * cfg.phi) * math.cos(2.0 * cfg.ell * cfg.phi)))


def parity_signal_circular(nc: float, cfg: RotationConfig) -> float:
    """圆偏振信号 exp{−2N_C sin²[(ℓ+1)φ]}，ℓ 按旋向取符号"""
    _check_nc(nc)
    return math.exp(-2.0 * nc * math.sin(cfg.angular_gain * cfg.phi) ** 2)


def coherent_signal_curve(mode: str, nc: float, ell: int, phis: np.ndarray,
                          handedness: int = 1) -> np.ndarray:
    """
    闭式信号的向量化版本

    Args:
        mode: 'linear' 或 'circular'
        nc: 平均光子数
        ell: OAM 量子数
        phis: 角位移数组
        handedness: 圆偏振旋向
    """
    _check_nc(nc)
    cfg = RotationConfig(ell, 0.0, handedness)
    phis = np.asarray(phis, dtype=float)
    if mode == 'linear':
        return np.exp(-nc * (1.0 - np.cos(2.0 * phis) * np.cos(2.0 * cfg.ell * phis)))
    if mode == 'circular':
        return np.exp(-2.0 * nc * np.sin(cfg.angular_gain * phis) ** 2)
    raise DomainError(f"未知偏振模式: {mode}")
