"""
偏振相干态的截断 Fock 校验
输出振幅由传播闭式给出，每个偏振模用截断位移算符构造相干态，再逐模求奇偶
"""

import logging
from typing import Optional

import numpy as np
from scipy.linalg import expm
from scipy.stats import poisson

from config.config import ORACLE_CONFIG
from src.polarization.coherent_signals import PolarizedCoherentInput, propagate_output_amplitudes
from src.polarization.rotation import RotationConfig
from src.utils.exceptions import DomainError, LeakageExceeded

logger = logging.getLogger(__name__)

# 位移算符矩阵指数在截断边界附近失真，额外多取的维数
_PADDING = 24


def truncated_coherent_amplitudes(gamma: complex, n_max: int) -> np.ndarray:
    """
    D(γ)|0⟩ 在 n = 0..n_max 上的振幅

    在 n_max + padding 维空间中计算 exp(γa† − γ*a) 的第一列后截取。
    """
    if n_max < 0:
        raise DomainError(f"截断阶数必须非负, 收到 {n_max}")
    dim = n_max + 1 + _PADDING
    lowering = np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1)
    generator = gamma * lowering.T - np.conj(gamma) * lowering
    column = expm(generator)[:, 0]
    return column[:n_max + 1]


def _mode_parity(gamma: complex, n_max: int, tail: float) -> float:
    mean = abs(gamma) ** 2
    dropped = float(poisson.sf(n_max, mean)) if mean > 0 else 0.0
    if dropped > tail:
        raise LeakageExceeded(f"|γ|²={mean:.4g} 在 n_max={n_max} 处泊松尾部 {dropped:.3e} 超过 {tail:.1e}")
    amps = truncated_coherent_amplitudes(gamma, n_max)
    signs = np.where(np.arange(n_max + 1) % 2 == 0, 1.0, -1.0)
    return float(np.sum(signs * np.abs(amps) ** 2))


def coherent_oracle_signal(inp: PolarizedCoherentInput, cfg: RotationConfig,
                           n_max: int = 40, tail: Optional[float] = None) -> float:
    """
    路径 A 输出两偏振模奇偶之积

    Raises:
        LeakageExceeded: 输入或输出模的泊松尾部超过容差
    """
    tail = ORACLE_CONFIG['coherent_tail'] if tail is None else tail
    for label, amp in (('H', inp.alpha), ('V', inp.beta)):
        mean = abs(amp) ** 2
        if mean > 0 and poisson.sf(n_max, mean) > tail:
            raise LeakageExceeded(f"输入 {label} 模 |γ|²={mean:.4g} 超出截断 n_max={n_max}")

    out_h, out_v = propagate_output_amplitudes(inp, cfg)
    value = _mode_parity(out_h, n_max, tail) * _mode_parity(out_v, n_max, tail)
    logger.debug(f"相干态校验 phi={cfg.phi:.6g}: 奇偶 {value:.12g}")
    return value
