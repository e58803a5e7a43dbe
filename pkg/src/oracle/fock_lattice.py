"""
截断双模 Fock 格点
基矢 |j,k⟩ 满足 j+k ≤ N，按总光子数壳层 s = j+k 排列，索引 s(s+1)/2 + j
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from config.config import ORACLE_CONFIG
from src.states.tsb_state import TwinFockState
from src.utils.exceptions import DomainError


def lattice_size(cutoff: int) -> int:
    return (cutoff + 1) * (cutoff + 2) // 2


def lattice_index(j: int, k: int) -> int:
    s = j + k
    return s * (s + 1) // 2 + j


@lru_cache(maxsize=16)
def lattice_modes(cutoff: int) -> Tuple[np.ndarray, np.ndarray]:
    """每个索引对应的 (j, k) 光子数"""
    shells = np.repeat(np.arange(cutoff + 1), np.arange(1, cutoff + 2))
    starts = shells * (shells + 1) // 2
    j = np.arange(lattice_size(cutoff)) - starts
    k = shells - j
    j.setflags(write=False)
    k.setflags(write=False)
    return j, k


def shell_slice(s: int) -> slice:
    start = s * (s + 1) // 2
    return slice(start, start + s + 1)


def _check_cutoff(cutoff: int) -> int:
    if int(cutoff) != cutoff or cutoff < 0:
        raise DomainError(f"格点截断必须为非负整数, 收到 {cutoff}")
    if cutoff > ORACLE_CONFIG['max_cutoff']:
        raise DomainError(f"格点截断 {cutoff} 超过上限 {ORACLE_CONFIG['max_cutoff']}")
    return int(cutoff)


@dataclass(frozen=True, eq=False)
class OracleState:
    """
    截断格点上的纯态

    Args:
        amps: 复振幅，长度 (N+1)(N+2)/2
        n_max_total: 总光子数截断 N
        leakage: 累计的截断泄漏
    """
    amps: np.ndarray
    n_max_total: int
    leakage: float = 0.0

    def __post_init__(self):
        cutoff = _check_cutoff(self.n_max_total)
        amps = np.array(self.amps, dtype=complex)
        if amps.shape != (lattice_size(cutoff),):
            raise DomainError(f"振幅长度 {amps.shape} 与截断 N={cutoff} 不一致")
        norm = float(np.vdot(amps, amps).real)
        if norm > 1.0 + 1e-12:
            raise DomainError(f"格点态范数超过 1: {norm!r}")
        amps.setflags(write=False)
        object.__setattr__(self, 'amps', amps)
        object.__setattr__(self, 'n_max_total', cutoff)

    @classmethod
    def from_amplitudes(cls, mapping, cutoff: int) -> 'OracleState':
        """由 {(j, k): amplitude} 构造"""
        cutoff = _check_cutoff(cutoff)
        amps = np.zeros(lattice_size(cutoff), dtype=complex)
        for (j, k), value in mapping.items():
            if j < 0 or k < 0 or j + k > cutoff:
                raise DomainError(f"Fock 对 ({j}, {k}) 超出截断 N={cutoff}")
            amps[lattice_index(j, k)] = value
        return cls(amps, cutoff)

    @classmethod
    def vacuum(cls, cutoff: int) -> 'OracleState':
        return cls.from_amplitudes({(0, 0): 1.0}, cutoff)

    @classmethod
    def fock(cls, j: int, k: int, cutoff: int) -> 'OracleState':
        return cls.from_amplitudes({(j, k): 1.0}, cutoff)

    @classmethod
    def tsb_input(cls, delta: float, cutoff: int) -> 'OracleState':
        """压缩前的 cosδ|0,0⟩ + sinδ|1,1⟩"""
        if cutoff < 2:
            raise DomainError("TSB 输入至少需要截断 N=2")
        return cls.from_amplitudes({(0, 0): math.cos(delta), (1, 1): math.sin(delta)}, cutoff)

    @classmethod
    def from_twin_fock(cls, state: TwinFockState, cutoff: int) -> 'OracleState':
        """把孪生Fock展开放到格点上，2n > N 的项计入泄漏"""
        cutoff = _check_cutoff(cutoff)
        keep = min(state.n_max, cutoff // 2)
        amps = np.zeros(lattice_size(cutoff), dtype=complex)
        n = np.arange(keep + 1)
        amps[2 * n * (2 * n + 1) // 2 + n] = state.coeffs[:keep + 1]
        dropped = float(np.sum(state.coeffs[keep + 1:] ** 2)) + state.tail_bound
        return cls(amps, cutoff, leakage=dropped)

    def amplitude(self, j: int, k: int) -> complex:
        if j + k > self.n_max_total:
            return 0j
        return complex(self.amps[lattice_index(j, k)])

    @property
    def norm(self) -> float:
        return float(np.vdot(self.amps, self.amps).real)

    def diagonal(self) -> np.ndarray:
        """|n,n⟩ 上的振幅，n = 0..N//2"""
        n = np.arange(self.n_max_total // 2 + 1)
        return self.amps[2 * n * (2 * n + 1) // 2 + n]

    def off_diagonal_mass(self) -> float:
        j, k = lattice_modes(self.n_max_total)
        mask = j != k
        return float(np.sum(np.abs(self.amps[mask]) ** 2))

    def shell_mass(self, shells: int) -> float:
        """最外 shells 个光子数壳层上的概率"""
        j, k = lattice_modes(self.n_max_total)
        mask = (j + k) > self.n_max_total - shells
        return float(np.sum(np.abs(self.amps[mask]) ** 2))
