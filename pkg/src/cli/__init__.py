"""
命令行模块
扫描规格、扫描命令、图像预设、结果文件与一致性检查
"""

from .sweep_spec import SweepSpec, build_spec, parse_number, parse_range, load_config_file
from .sweeps import cmd_signal, cmd_sensitivity_surface, cmd_tmsn, run_grid
from .presets import preset_spec, run_figure, run_figure_curves
from .artifacts import render_table, write_table, write_gnuplot_stub
from .oracle_check import run_oracle_check

__all__ = [
    'SweepSpec',
    'build_spec',
    'parse_number',
    'parse_range',
    'load_config_file',
    'cmd_signal',
    'cmd_sensitivity_surface',
    'cmd_tmsn',
    'run_grid',
    'preset_spec',
    'run_figure',
    'run_figure_curves',
    'render_table',
    'write_table',
    'write_gnuplot_stub',
    'run_oracle_check',
]

__version__ = '1.0.0'
