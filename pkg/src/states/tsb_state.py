#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
可调压缩Bell态 (TSB) 孪生Fock展开

TSB 态为双模压缩算符作用在 cosδ|0,0⟩ + sinδ|1,1⟩ 上的结果，
在对角基 |n,n⟩ 下只有实系数 G(n)。本模块负责：
1. 系数 G(n) 的闭式计算（含 n=0 项的代数化简）
2. 基于几何级数上界的自适应截断阶数选择
3. 平均光子数等派生量
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from config.config import TRUNCATION_CONFIG
from src.utils.exceptions import DomainError, TruncationOverflow

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TsbParams:
    """TSB 态参数：压缩因子 r 与可调因子 δ（弧度）"""
    r: float
    delta: float

    def __post_init__(self):
        if not math.isfinite(self.r) or self.r < 0:
            raise DomainError(f"压缩因子 r 必须为非负有限数, 收到 r={self.r}")
        if not math.isfinite(self.delta) or not 0.0 <= self.delta <= math.pi / 2:
            raise DomainError(f"可调因子 delta 必须位于 [0, π/2], 收到 delta={self.delta}")


@dataclass(frozen=True, eq=False)
class TwinFockState:
    """
    孪生Fock展开 Σ G(n)|n,n⟩ 的截断表示

    Args:
        coeffs: 实系数 G(0..n_max)，构造后只读
        n_max: 截断阶数
        tail_bound: 被丢弃概率质量的上界
        eps_trunc: 生成时使用的截断容差
        params: 生成该态的 TSB 参数（外部构造的态可为空）
    """
    coeffs: np.ndarray
    n_max: int
    tail_bound: float = 0.0
    eps_trunc: float = TRUNCATION_CONFIG['eps_trunc']
    params: Optional[TsbParams] = field(default=None)

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float)
        if coeffs.ndim != 1 or coeffs.size != self.n_max + 1:
            raise DomainError(f"系数长度 {coeffs.size} 与 n_max={self.n_max} 不一致")
        coeffs.setflags(write=False)
        object.__setattr__(self, 'coeffs', coeffs)

        slack = TRUNCATION_CONFIG['norm_slack']
        norm = self.norm
        if not (1.0 - self.tail_bound - slack <= norm <= 1.0 + slack):
            raise DomainError(f"孪生Fock态未归一: ΣG²={norm!r}, tail_bound={self.tail_bound:.3e}")

    @property
    def probabilities(self) -> np.ndarray:
        """光子数分布 G(n)²"""
        return self.coeffs ** 2

    @property
    def norm(self) -> float:
        return float(np.sum(self.coeffs ** 2))


def c00(r: float) -> float:
    """⟨0,0|S|1,1⟩ = tanh r / cosh r"""
    return math.tanh(r) / math.cosh(r)


def c11(r: float) -> float:
    """⟨1,1|S|1,1⟩ = (1 − sinh²r) / cosh³r"""
    return (1.0 - math.sinh(r) ** 2) / math.cosh(r) ** 3


def _tail_majorant(r: float, hard_cap: int, safety_factor: float) -> np.ndarray:
    """
    对 N = 1..hard_cap 计算 Σ_{n>N} G(n)² 的闭式上界

    |G(n)| ≤ t^{n−1}(A + B·n)，A = t/c + s²/c³，B = 1/c³，
    对 q = t² 的几何级数及其一阶、二阶矩求和。
    """
    t, s, c = math.tanh(r), math.sinh(r), math.cosh(r)
    q = t * t
    orders = np.arange(1, hard_cap + 1, dtype=float)

    with np.errstate(over='ignore', invalid='ignore'):
        a_coef = t / c + s * s / c ** 3
        b_coef = 1.0 / c ** 3
        u = a_coef + b_coef * (orders + 1.0)
        s0 = c ** 2
        s1 = q * c ** 4
        s2 = q * (1.0 + q) * c ** 6
        bound = np.power(q, orders) * (u * u * s0 + 2.0 * u * b_coef * s1 + b_coef ** 2 * s2)
    return safety_factor * bound


def select_cutoff(r: float, eps: float,
                  hard_cap: Optional[int] = None,
                  safety_factor: Optional[float] = None) -> Tuple[int, float]:
    """
    选择满足尾部概率 < eps 的最小截断阶数

    上界与 δ 无关，因此同一 r 下所有 δ 共享 n_max。

    Returns:
        (n_max, tail_bound)

    Raises:
        TruncationOverflow: 达到 hard_cap 仍未满足容差
    """
    if not 0.0 < eps < 1.0:
        raise DomainError(f"截断容差 eps 必须位于 (0, 1), 收到 eps={eps}")
    hard_cap = hard_cap or TRUNCATION_CONFIG['hard_cap']
    safety_factor = safety_factor or TRUNCATION_CONFIG['safety_factor']

    bound = _tail_majorant(r, hard_cap, safety_factor)
    ok = np.isfinite(bound) & (bound < eps)
    if not ok.any():
        raise TruncationOverflow(
            f"r={r} 时截断阶数超过上限 {hard_cap} 仍无法满足尾部容差 {eps:.1e}")
    idx = int(np.argmax(ok))
    n_max = idx + 1
    logger.debug(f"r={r:.6g} 截断阶数 n_max={n_max}, 尾部上界 {bound[idx]:.3e}")
    return n_max, float(bound[idx])


def _squeezed_number_series(r: float, n: np.ndarray) -> np.ndarray:
    """S(r)|1,1⟩ 的对角系数，n=0 项化简为 tanh r / cosh r"""
    t, s, c = math.tanh(r), math.sinh(r), math.cosh(r)
    out = np.empty(n.size, dtype=float)
    out[0] = c00(r)
    k = n[1:]
    out[1:] = np.power(-t, k - 1) * (k - s * s) / c ** 3
    return out


def tsb_coefficients(params: TsbParams, eps: Optional[float] = None) -> TwinFockState:
    """
    计算 TSB 态的孪生Fock系数

    G(n) = cosδ·(−tanh r)^n / cosh r
         + sinδ·(−tanh r)^{n−1}·[n·C11 + tanh r·(n−1)·C00]

    n=0 时第二项化简为 sinδ·C00，不计算零的负幂。

    Args:
        params: TSB 参数
        eps: 截断容差，默认取 TRUNCATION_CONFIG

    Returns:
        TwinFockState
    """
    eps = TRUNCATION_CONFIG['eps_trunc'] if eps is None else eps
    r, delta = params.r, params.delta
    n_max, tail = select_cutoff(r, eps)

    t = math.tanh(r)
    n = np.arange(n_max + 1)
    vacuum_part = np.power(-t, n) / math.cosh(r)

    number_part = np.empty(n_max + 1, dtype=float)
    number_part[0] = c00(r)
    k = n[1:]
    number_part[1:] = np.power(-t, k - 1) * (k * c11(r) + t * (k - 1) * c00(r))

    coeffs = math.cos(delta) * vacuum_part + math.sin(delta) * number_part
    return TwinFockState(coeffs=coeffs, n_max=n_max, tail_bound=tail, eps_trunc=eps, params=params)


def squeezed_vacuum_coefficients(r: float, eps: Optional[float] = None) -> TwinFockState:
    """双模压缩真空 (δ=0)：G(n) = (−tanh r)^n / cosh r"""
    eps = TRUNCATION_CONFIG['eps_trunc'] if eps is None else eps
    params = TsbParams(r, 0.0)
    n_max, tail = select_cutoff(r, eps)
    n = np.arange(n_max + 1)
    coeffs = np.power(-math.tanh(r), n) / math.cosh(r)
    return TwinFockState(coeffs=coeffs, n_max=n_max, tail_bound=tail, eps_trunc=eps, params=params)


def squeezed_number_coefficients(r: float, eps: Optional[float] = None) -> TwinFockState:
    """双模压缩数态 TMSN (δ=π/2)：G(n) = (−tanh r)^{n−1}(n − sinh²r) / cosh³r"""
    eps = TRUNCATION_CONFIG['eps_trunc'] if eps is None else eps
    params = TsbParams(r, math.pi / 2)
    n_max, tail = select_cutoff(r, eps)
    coeffs = _squeezed_number_series(r, np.arange(n_max + 1))
    return TwinFockState(coeffs=coeffs, n_max=n_max, tail_bound=tail, eps_trunc=eps, params=params)


def mean_photon_number(state: TwinFockState) -> float:
    """两模总平均光子数 2·Σ n·G(n)²"""
    n = np.arange(state.n_max + 1)
    return float(2.0 * np.sum(n * state.probabilities))


def mean_photon_number_closed_form(params: TsbParams) -> float:
    """TSB 态平均光子数闭式：2cos²δ·sinh²r + sin²δ·(6sinh²r+2) − 2sin2δ·sinh r·cosh r"""
    s, c = math.sinh(params.r), math.cosh(params.r)
    cd, sd = math.cos(params.delta), math.sin(params.delta)
    return (2.0 * cd ** 2 * s ** 2
            + sd ** 2 * (6.0 * s ** 2 + 2.0)
            - 2.0 * math.sin(2.0 * params.delta) * s * c)


def factorial_moment(state: TwinFockState) -> float:
    """Σ n(n+1)·G(n)²，信号峰处的曲率"""
    n = np.arange(state.n_max + 1)
    return float(np.sum(n * (n + 1) * state.probabilities))
