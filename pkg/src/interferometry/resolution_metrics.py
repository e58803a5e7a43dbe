"""
分辨率指标
信号曲线的可见度、半高全宽与峰计数
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, NamedTuple, Optional

import numpy as np
from scipy.signal import find_peaks, peak_widths

from config.config import RESOLUTION_CONFIG
from src.interferometry.parity_signal import parity_curve, sensitivity_curve
from src.polarization.rotation import signal_period
from src.states.tsb_state import TwinFockState
from src.utils.exceptions import DomainError, MetricUndefined

logger = logging.getLogger(__name__)

CURVE_KINDS = ('signal', 'sensitivity')


@dataclass(frozen=True, eq=False)
class SignalCurve:
    """
    采样曲线

    Args:
        phis: 严格递增的角位移采样
        values: 对应的 ⟨Π⟩ 或 Δφ
        kind: 'signal' 或 'sensitivity'
        metadata: 扫描参数 (r, delta, ell, eps_trunc 等)
        periodic: 为 True 时采样覆盖 [a, a+L) 且首尾周期衔接
    """
    phis: np.ndarray
    values: np.ndarray
    kind: str = 'signal'
    metadata: Dict[str, Any] = field(default_factory=dict)
    periodic: bool = False

    def __post_init__(self):
        phis = np.array(self.phis, dtype=float)
        values = np.array(self.values, dtype=float)
        if self.kind not in CURVE_KINDS:
            raise DomainError(f"未知曲线类型: {self.kind}")
        if phis.ndim != 1 or phis.shape != values.shape or phis.size < 2:
            raise DomainError("phis 与 values 必须为等长的一维数组且至少两个点")
        if np.any(np.diff(phis) <= 0):
            raise DomainError("phis 必须严格递增")
        allowed = np.isfinite(values)
        if self.kind == 'sensitivity':
            allowed |= np.isposinf(values)
        if not allowed.all():
            raise DomainError(f"{self.kind} 曲线含非法数值")
        phis.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, 'phis', phis)
        object.__setattr__(self, 'values', values)


class ResolutionMetrics(NamedTuple):
    visibility: float
    fwhm: float
    peak_count: int


def _period_abscissas(period: float, periods: int, points_per_period: int, start: float) -> np.ndarray:
    count = periods * points_per_period
    return start + np.arange(count) * (periods * period / count)


def sample_signal_curve(state: TwinFockState, ell: int, phis=None, handedness: int = 1,
                        points_per_period: Optional[int] = None) -> SignalCurve:
    """
    采样 TSB 奇偶信号；未给定 phis 时在 [0, L) 上做周期采样
    """
    periodic = phis is None
    if periodic:
        points_per_period = points_per_period or RESOLUTION_CONFIG['points_per_period']
        phis = _period_abscissas(signal_period(ell, handedness), 1, points_per_period, 0.0)
    values = parity_curve(state, ell, phis, handedness)
    return SignalCurve(phis, values, 'signal', _state_metadata(state, ell), periodic)


def sample_sensitivity_curve(state: TwinFockState, ell: int, phis, handedness: int = 1) -> SignalCurve:
    values = sensitivity_curve(state, ell, phis, handedness)
    return SignalCurve(phis, values, 'sensitivity', _state_metadata(state, ell), False)


def _state_metadata(state: TwinFockState, ell: int) -> Dict[str, Any]:
    meta = {'ell': int(ell), 'eps_trunc': state.eps_trunc, 'n_max': state.n_max}
    if state.params is not None:
        meta.update(r=state.params.r, delta=state.params.delta)
    return meta


def _uniform_step(phis: np.ndarray) -> float:
    steps = np.diff(phis)
    step = float(np.mean(steps))
    if np.max(np.abs(steps - step)) > 1e-9 * max(step, 1e-300) * len(phis):
        raise DomainError("分辨率指标要求均匀采样")
    return step


def resolution_metrics(curve: SignalCurve) -> ResolutionMetrics:
    """
    计算可见度 (max−min)/(max+min)、中央峰半高全宽与 [0, 2π) 内的峰个数

    周期曲线（或恰好覆盖 [a, a+2π) 的曲线）拼接三份后检测峰，只统计中间一份；
    峰个数按 2π/窗口长度 外推。

    Raises:
        MetricUndefined: 平坦曲线
    """
    if curve.kind != 'signal':
        raise DomainError("分辨率指标只适用于信号曲线")
    values = curve.values
    vmax, vmin = float(values.max()), float(values.min())
    if vmax == vmin or vmax + vmin == 0.0:
        raise MetricUndefined(f"曲线平坦或极值和为零: max={vmax}, min={vmin}")

    visibility = (vmax - vmin) / (vmax + vmin)
    half_level = vmin + (vmax - vmin) / 2.0
    step = _uniform_step(curve.phis)
    size = values.size
    # [a, a+2π) 的半开采样与周期采样同样首尾衔接
    wraps = curve.periodic or math.isclose(size * step, 2.0 * math.pi, rel_tol=1e-9)

    if wraps:
        extended = np.tile(values, 3)
        offset = size
    else:
        # 首尾两点也可作为峰
        extended = np.concatenate(([-np.inf], values, [-np.inf]))
        offset = 1

    peaks, props = find_peaks(np.where(np.isfinite(extended), extended, vmin - 1.0),
                              height=half_level)
    own = (peaks >= offset) & (peaks < offset + size)

    if wraps:
        span = size * step
        peak_count = int(round(own.sum() * 2.0 * math.pi / span))
    else:
        inside = peaks[own] - offset
        window = (curve.phis[inside] >= 0.0) & (curve.phis[inside] < 2.0 * math.pi)
        peak_count = int(window.sum())

    fwhm = _central_fwhm(extended, peaks[own], offset, size, vmin, vmax, step)
    logger.debug(f"可见度 {visibility:.6f}, FWHM {fwhm:.6e}, 峰个数 {peak_count}")
    return ResolutionMetrics(visibility=visibility, fwhm=fwhm, peak_count=peak_count)


def _central_fwhm(extended: np.ndarray, peaks: np.ndarray, offset: int, size: int,
                  vmin: float, vmax: float, step: float) -> float:
    """最高且最靠近窗口中点的峰，在 min + (max−min)/2 处的全宽"""
    if peaks.size == 0:
        raise MetricUndefined("曲线内没有高于半高的峰")
    heights = extended[peaks]
    tallest = peaks[heights >= vmax - 1e-12 * max(abs(vmax), 1.0)]
    if tallest.size == 0:
        tallest = peaks
    middle = offset + (size - 1) / 2.0
    central = tallest[np.argmin(np.abs(tallest - middle))]

    finite = np.where(np.isfinite(extended), extended, vmin)
    prominence = np.array([finite[central] - vmin])
    bases = (np.array([0]), np.array([finite.size - 1]))
    widths = peak_widths(finite, np.array([central]), rel_height=0.5,
                         prominence_data=(prominence, bases[0], bases[1]))[0]
    return float(widths[0] * step)
