"""
最优灵敏度搜索
先在覆盖整周期的均匀网格上扫描，再在最优点所在区间内做黄金分割细化
"""

import math
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import minimize_scalar

from config.config import SENSITIVITY_CONFIG
from src.interferometry.parity_signal import heisenberg_limit, sensitivity_curve
from src.polarization.rotation import signal_period
from src.states.tsb_state import TwinFockState, mean_photon_number
from src.utils.exceptions import DomainError, SearchFailure

logger = logging.getLogger(__name__)

# 细化时代替 +inf 的有限值，避免抛物线插值出现 inf − inf
_PENALTY = 1e300


@dataclass(frozen=True)
class SearchGrid:
    """
    搜索网格

    Args:
        points_per_period: 每个信号周期的采样点数
        periods: 覆盖的周期数（至少 1）
        start: 网格起点（弧度）
    """
    points_per_period: int = SENSITIVITY_CONFIG['points_per_period']
    periods: float = 1.0
    start: float = 0.0

    def __post_init__(self):
        if self.points_per_period < 4:
            raise DomainError(f"每周期采样点数过少: {self.points_per_period}")
        if self.periods < 1.0:
            raise DomainError(f"搜索网格必须覆盖至少一个信号周期, 收到 periods={self.periods}")

    def abscissas(self, period: float) -> np.ndarray:
        count = int(math.ceil(self.points_per_period * self.periods)) + 1
        return np.linspace(self.start, self.start + self.periods * period, count)


@dataclass(frozen=True)
class SensitivityReport:
    """最优灵敏度报告"""
    phi_opt: float
    delta_phi_opt: float
    heisenberg_limit: float
    difference: float
    mean_photon_number: float
    ell: int


def _refine(state: TwinFockState, ell: int, handedness: int,
            phis: np.ndarray, values: np.ndarray, idx: int, xtol: float):
    """在网格最优点的邻域内细化，返回 (phi, value)"""

    def objective(phi: float) -> float:
        value = float(sensitivity_curve(state, ell, [phi], handedness)[0])
        return value if math.isfinite(value) else _PENALTY

    last = len(phis) - 1
    lo, hi = phis[max(idx - 1, 0)], phis[min(idx + 1, last)]
    strict = 0 < idx < last and values[idx] < values[idx - 1] and values[idx] < values[idx + 1]
    try:
        if strict:
            res = minimize_scalar(objective, bracket=(lo, phis[idx], hi), method='golden',
                                  options={'xtol': xtol})
        else:
            res = minimize_scalar(objective, bounds=(lo, hi), method='bounded',
                                  options={'xatol': xtol * max(abs(hi), 1.0)})
    except (ValueError, RuntimeError) as e:
        logger.debug(f"细化失败, 保留网格最优点: {e}")
        return phis[idx], values[idx]

    phi_ref = float(res.x)
    if not lo <= phi_ref <= hi:
        return phis[idx], values[idx]
    value = float(sensitivity_curve(state, ell, [phi_ref], handedness)[0])
    if value < values[idx]:
        return phi_ref, value
    return phis[idx], values[idx]


def optimal_sensitivity(state: TwinFockState, ell: int,
                        search: Optional[SearchGrid] = None,
                        handedness: int = 1) -> SensitivityReport:
    """
    在至少一个信号周期内搜索 Δφ 的最小值

    Args:
        state: 孪生Fock态
        ell: OAM 量子数
        search: 搜索网格，默认每周期 4096 点
        handedness: 旋向

    Returns:
        SensitivityReport

    Raises:
        SearchFailure: 网格上全部为 +inf
    """
    search = search or SearchGrid()
    period = signal_period(ell, handedness)
    phis = search.abscissas(period)
    values = sensitivity_curve(state, ell, phis, handedness)

    finite = np.isfinite(values)
    if not finite.any():
        raise SearchFailure(f"ell={ell} 的搜索网格上灵敏度全部发散")

    idx = int(np.argmin(values))
    phi_opt, delta_phi_opt = _refine(state, ell, handedness, phis, values, idx,
                                     SENSITIVITY_CONFIG['refine_xtol'])

    n_mean = mean_photon_number(state)
    hl = heisenberg_limit(n_mean, ell)
    logger.debug(f"ell={ell} 最优灵敏度 {delta_phi_opt:.6e} @ phi={phi_opt:.6e}, HL={hl:.6e}")
    return SensitivityReport(
        phi_opt=float(phi_opt),
        delta_phi_opt=float(delta_phi_opt),
        heisenberg_limit=hl,
        difference=hl - float(delta_phi_opt),
        mean_photon_number=n_mean,
        ell=int(ell),
    )
