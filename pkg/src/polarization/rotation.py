"""
旋转装置配置
角位移 φ 在路径间产生 2ℓφ 的 OAM 相位差与 2φ 的偏振旋转角
"""

import math
from dataclasses import dataclass

from src.utils.exceptions import DomainError


@dataclass(frozen=True)
class RotationConfig:
    """
    干涉仪旋转配置

    Args:
        ell: OAM 量子数（非负整数）
        phi: 角位移（弧度）
        handedness: 圆偏振旋向，+1 对应 varphi=−π/2，−1 对应 varphi=+π/2（等价于 ℓ→−ℓ）
    """
    ell: int
    phi: float = 0.0
    handedness: int = 1

    def __post_init__(self):
        if isinstance(self.ell, bool) or int(self.ell) != self.ell or self.ell < 0:
            raise DomainError(f"OAM 量子数 ell 必须为非负整数, 收到 ell={self.ell}")
        object.__setattr__(self, 'ell', int(self.ell))
        if self.handedness not in (1, -1):
            raise DomainError(f"旋向 handedness 只能取 ±1, 收到 {self.handedness}")
        if not math.isfinite(self.phi):
            raise DomainError(f"角位移 phi 必须为有限数, 收到 phi={self.phi}")

    @property
    def signed_ell(self) -> int:
        return self.handedness * self.ell

    @property
    def angular_gain(self) -> int:
        """每个光子的角相位增益系数 ℓ+1（含旋向）"""
        return self.signed_ell + 1

    def with_phi(self, phi: float) -> 'RotationConfig':
        return RotationConfig(self.ell, phi, self.handedness)


def signal_period(ell: int, handedness: int = 1) -> float:
    """TSB 奇偶信号周期 π/[2|ℓ+1|]"""
    gain = abs(RotationConfig(ell, 0.0, handedness).angular_gain)
    if gain == 0:
        raise DomainError("角相位增益为零时信号不随 φ 变化, 周期无定义")
    return math.pi / (2.0 * gain)
