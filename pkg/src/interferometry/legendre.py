"""
Legendre 多项式及其导数

奇偶信号写成 Σ G(n)² P_n(x) 的形式，x = −cos[4(ℓ+1)φ]。
信号峰位于 x = 1 附近，直接递推在该处会丢失 1 − P_n 的有效位，
因此另外提供以 y = 1 − x 为自变量的偏移递推。
"""

import logging
from typing import Tuple

import numpy as np

from config.config import LEGENDRE_CONFIG
from src.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


def _clamp_argument(x, clamp_slack: float = None, domain_slack: float = None) -> np.ndarray:
    clamp_slack = LEGENDRE_CONFIG['clamp_slack'] if clamp_slack is None else clamp_slack
    domain_slack = LEGENDRE_CONFIG['domain_slack'] if domain_slack is None else domain_slack

    x = np.asarray(x, dtype=float)
    excess = np.abs(x) - 1.0
    if not np.all(np.isfinite(x)) or np.any(excess > domain_slack):
        raise DomainError(f"Legendre 自变量超出 [-1, 1]: max|x|={np.max(np.abs(x))!r}")
    if np.any(excess > clamp_slack):
        logger.debug(f"Legendre 自变量超出钳位容差, 最大超出 {np.max(excess):.3e}")
    return np.clip(x, -1.0, 1.0)


def _check_order(n: int) -> int:
    if int(n) != n or n < 0:
        raise DomainError(f"Legendre 阶数必须为非负整数, 收到 n={n}")
    return int(n)


def legendre(n: int, x: float) -> float:
    """
    n 阶 Legendre 多项式，三项递推 (k+1)P_{k+1} = (2k+1)xP_k − kP_{k−1}

    Raises:
        DomainError: |x| > 1 + domain_slack
    """
    n = _check_order(n)
    x = float(_clamp_argument(x))
    p_prev, p = 1.0, x
    if n == 0:
        return 1.0
    for k in range(1, n):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    return min(1.0, max(-1.0, p))


def legendre_table(n_max: int, x) -> np.ndarray:
    """
    0..n_max 阶 Legendre 多项式表

    Returns:
        形状为 (n_max+1, *x.shape) 的数组
    """
    n_max = _check_order(n_max)
    x = _clamp_argument(x)
    table = np.empty((n_max + 1,) + x.shape, dtype=float)
    table[0] = 1.0
    if n_max >= 1:
        table[1] = x
    for k in range(1, n_max):
        table[k + 1] = ((2 * k + 1) * x * table[k] - k * table[k - 1]) / (k + 1)
    return np.clip(table, -1.0, 1.0)


def legendre_derivative(n: int, x: float) -> float:
    """
    P'_n(x) = n[P_{n−1}(x) − xP_n(x)] / (1 − x²)

    端点处取极限 n(n+1)/2·(±1)^{n+1}。
    """
    n = _check_order(n)
    x = float(_clamp_argument(x))
    if n == 0:
        return 0.0
    if abs(x) == 1.0:
        return n * (n + 1) / 2.0 * x ** (n + 1)
    return n * (legendre(n - 1, x) - x * legendre(n, x)) / (1.0 - x * x)


def legendre_offset_table(n_max: int, y) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    在 x = 1 − y (0 ≤ y ≤ 1) 处计算 P_n、P'_n 与 1 − P_n

    令 R_n = (1 − P_n)/y，递推改写为
        (k+1)R_{k+1} = (2k+1) + (2k+1)(1−y)R_k − kR_{k−1}，R_0 = 0，R_1 = 1
    导数 P'_n = n[1 − yR_n + R_n − R_{n−1}] / (2 − y)，在 y = 0 处精确等于 n(n+1)/2。

    Returns:
        (P, dP, one_minus_P)，形状均为 (n_max+1, *y.shape)
    """
    n_max = _check_order(n_max)
    y = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(y)) or np.any(y < 0.0) or np.any(y > 1.0):
        raise DomainError("偏移自变量 y 必须位于 [0, 1]")

    ratio = np.empty((n_max + 1,) + y.shape, dtype=float)
    ratio[0] = 0.0
    if n_max >= 1:
        ratio[1] = 1.0
    x = 1.0 - y
    for k in range(1, n_max):
        ratio[k + 1] = ((2 * k + 1) * (1.0 + x * ratio[k]) - k * ratio[k - 1]) / (k + 1)

    one_minus = y * ratio
    values = 1.0 - one_minus

    derivs = np.zeros_like(ratio)
    orders = np.arange(1, n_max + 1).reshape((-1,) + (1,) * y.ndim)
    derivs[1:] = orders * (1.0 - one_minus[1:] + ratio[1:] - ratio[:-1]) / (2.0 - y)
    return values, derivs, one_minus
