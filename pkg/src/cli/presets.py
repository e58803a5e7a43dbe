"""
图像数据预设
每个预设对应一组固定的扫描参数，输出一张结果表
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from config.config import FIGURE_PRESETS
from src.cli.sweep_spec import SweepSpec, build_spec, parse_number, parse_range
from src.cli.sweeps import cmd_sensitivity_surface, cmd_signal, cmd_tmsn
from src.interferometry.parity_signal import parity_curve
from src.states.tsb_state import squeezed_number_coefficients
from src.utils.exceptions import InvalidSweepSpec

logger = logging.getLogger(__name__)

# 各预设作图时的 (x 列, y 列)
PLOT_COLUMNS: Dict[str, Tuple[str, List[str]]] = {
    '2': ('phi_rad', ['signal']),
    '3': ('delta_rad', ['delta_phi_opt_rad']),
    '4': ('phi_rad', ['delta_phi_rad']),
    '5': ('delta_rad', ['hl_minus_delta_phi_rad']),
    '7': ('delta_rad', ['hl_minus_delta_phi_rad']),
    '8': ('r', ['visibility', 'fwhm_rad']),
    '9': ('r', ['delta_phi_opt_rad', 'hl_rad']),
}

_TMSN_TABLES = {
    'resolution': ['r', 'ell', 'visibility', 'fwhm_rad', 'peak_count'],
    'sensitivity': ['r', 'ell', 'mean_photon_number', 'delta_phi_opt_rad', 'hl_rad',
                    'delta_phi_opt_over_hl'],
}


def preset_spec(figure: str, overrides: Dict[str, Any] = None) -> SweepSpec:
    """按预设构造扫描规格，overrides 中非空的项（如 out、format、workers）覆盖预设"""
    if figure not in FIGURE_PRESETS:
        raise InvalidSweepSpec('figure', f"未知预设 '{figure}', 可选 {sorted(FIGURE_PRESETS)}", figure)
    preset = FIGURE_PRESETS[figure]
    base = SweepSpec(
        r_range=parse_range(preset.get('r', ('1', '1', 1)), 'r'),
        delta_range=parse_range(preset.get('delta', ('0', '0', 1)), 'delta'),
        ell=preset['ell'],
        phi_range=parse_range(preset.get('phi', ('0', 'pi', 512)), 'phi'),
        nc=float(preset.get('nc', 3.0)),
        sources=tuple(preset.get('sources', ('tsb',))),
        quantity=preset.get('quantity', 'signal'),
        delta_values=(tuple(parse_number(v, 'delta_values') for v in preset['delta_values'])
                      if 'delta_values' in preset else None),
    )
    allowed, ignored = {}, []
    for k, v in (overrides or {}).items():
        if k in ('out', 'format', 'workers', 'eps_trunc', 'gnuplot'):
            allowed[k] = v
        elif v is not None:
            ignored.append(k)
    if ignored:
        logger.warning(f"预设 figure {figure} 忽略参数: {', '.join(ignored)}")
    return build_spec(allowed, base=base)


def run_figure(figure: str, spec: SweepSpec) -> Tuple[str, pd.DataFrame]:
    """
    运行预设并返回 (命令名, 结果表)
    """
    preset = FIGURE_PRESETS[figure]
    command = preset['command']
    logger.info(f"运行预设 figure {figure} ({command})")
    if command == 'signal':
        df = cmd_signal(spec)
    elif command == 'sensitivity-surface':
        df = cmd_sensitivity_surface(spec)
    else:
        df = cmd_tmsn(spec)[_TMSN_TABLES[preset['table']]]
    return command, df


def run_figure_curves(figure: str, spec: SweepSpec) -> Optional[pd.DataFrame]:
    """
    预设附带的双模压缩数态信号曲线（每个 r 一条），无附带曲线时返回 None
    """
    curves = FIGURE_PRESETS[figure].get('curves')
    if curves is None:
        return None
    lo, hi, steps = parse_range(curves['phi'], 'phi')
    phis = np.linspace(lo, hi, steps)
    frames = []
    for r in (parse_number(v, 'r') for v in curves['r']):
        state = squeezed_number_coefficients(r, spec.eps_trunc)
        frames.append(pd.DataFrame({
            'r': r,
            'ell': spec.ell,
            'phi_rad': phis,
            'signal': parity_curve(state, spec.ell, phis, spec.handedness),
        }))
    logger.info(f"预设 figure {figure} 附带 {len(frames)} 条信号曲线")
    return pd.concat(frames, ignore_index=True)
