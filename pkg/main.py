#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
TSB 态角位移估计仿真系统 - 命令行主入口

使用方法：
python main.py signal --r 1 --delta pi/2 --ell 1 --phi-min 0 --phi-max pi/4 --phi-steps 513
python main.py sensitivity-surface --r 0.5:1:11 --delta 0:pi/2:21 --ell 1 --out outputs/data/surface.csv
python main.py tmsn --r 0.5:1.5:21 --format json
python main.py oracle-check --tolerance 1e-8
python main.py figure 7 --out outputs/data/figure7.csv --gnuplot

退出码：0 成功，1 检查未通过，2 输入无效
"""

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Dict, List, Optional

from config.config import LOG_CONFIG
from src.cli.artifacts import write_gnuplot_stub, write_table
from src.cli.oracle_check import run_oracle_check
from src.cli.presets import PLOT_COLUMNS, preset_spec, run_figure, run_figure_curves
from src.cli.sweep_spec import build_spec
from src.cli.sweeps import cmd_sensitivity_surface, cmd_signal, cmd_tmsn
from src.utils.exceptions import DomainError, InvalidSweepSpec, MetrologyError, TruncationOverflow

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INVALID = 0, 1, 2

SWEEP_PLOTS = {
    'signal': ('phi_rad', None),
    'sensitivity-surface': ('delta_rad', ['delta_phi_opt_rad', 'hl_rad']),
    'tmsn': ('r', ['visibility', 'fwhm_rad', 'delta_phi_opt_rad', 'hl_rad']),
}


class _ArgumentParser(argparse.ArgumentParser):
    """参数错误时抛出异常，由 main 统一映射为退出码 2"""

    def error(self, message):
        raise InvalidSweepSpec('arguments', message)


def setup_logging(verbose: bool = False, log_file: Optional[str] = None):
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=logging.DEBUG if verbose else LOG_CONFIG['level'],
        format=LOG_CONFIG['format'],
        handlers=handlers,
        force=True,
    )


def _common_options() -> argparse.ArgumentParser:
    parent = _ArgumentParser(add_help=False)
    parent.add_argument('--r', help="压缩因子: value 或 min:max:steps")
    parent.add_argument('--delta', help="可调因子 (弧度): value 或 min:max:steps, 支持 pi 写法")
    parent.add_argument('--delta-values', dest='delta_values', help="逗号分隔的 δ 列表")
    parent.add_argument('--ell', help="OAM 量子数")
    parent.add_argument('--phi-min', dest='phi_min')
    parent.add_argument('--phi-max', dest='phi_max')
    parent.add_argument('--phi-steps', dest='phi_steps')
    parent.add_argument('--nc', help="相干态平均光子数")
    parent.add_argument('--eps-trunc', dest='eps_trunc', help="孪生Fock截断容差")
    parent.add_argument('--handedness', help="圆偏振旋向 ±1")
    parent.add_argument('--source', help="信号来源 tsb,linear,circular")
    parent.add_argument('--quantity', help="signal 或 sensitivity")
    parent.add_argument('--format', help="csv 或 json")
    parent.add_argument('--out', help="输出文件路径, 缺省写到标准输出")
    parent.add_argument('--config', help="key=value 配置文件")
    parent.add_argument('--workers', help="并行进程数")
    parent.add_argument('--gnuplot', action='store_true', default=None, help="同时生成 gnuplot 脚本")
    parent.add_argument('--verbose', action='store_true')
    parent.add_argument('--log-file', dest='log_file')
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(description="TSB 态角位移估计仿真系统")
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_ArgumentParser)

    sub.add_parser('signal', parents=[common], help="奇偶信号/灵敏度随角位移的曲线")
    sub.add_parser('sensitivity-surface', parents=[common], help="(r, δ) 最优灵敏度曲面")
    sub.add_parser('tmsn', parents=[common], help="双模压缩数态可见度与灵敏度")

    check = sub.add_parser('oracle-check', help="解析结果与截断 Fock 模拟的一致性检查")
    check.add_argument('--tolerance', type=float, default=1e-8)
    check.add_argument('--format', default='csv')
    check.add_argument('--out')
    check.add_argument('--verbose', action='store_true')
    check.add_argument('--log-file', dest='log_file')

    figure = sub.add_parser('figure', parents=[common], help="运行图像数据预设")
    figure.add_argument('figure_id', choices=sorted(PLOT_COLUMNS))
    return parser


SPEC_FLAGS = ('r', 'delta', 'delta_values', 'ell', 'phi_min', 'phi_max', 'phi_steps', 'nc',
              'eps_trunc', 'handedness', 'source', 'quantity', 'format', 'out', 'workers', 'gnuplot')


def _flags(args: argparse.Namespace) -> Dict[str, Any]:
    return {k: getattr(args, k, None) for k in SPEC_FLAGS}


def _emit(df, spec, command: str, plot_cols):
    path = write_table(df, spec.out, spec.output_format, command, spec.metadata())
    if spec.gnuplot and path is not None and spec.output_format == 'csv':
        x_col, y_cols = plot_cols
        y_cols = y_cols or [c for c in df.columns if c in ('signal', 'delta_phi_rad')]
        write_gnuplot_stub(path, x_col, y_cols, list(df.columns))


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InvalidSweepSpec as e:
        sys.stderr.write(f"参数错误 [{e.field}]: {e}\n")
        return EXIT_INVALID

    setup_logging(args.verbose, args.log_file)
    try:
        if args.command == 'oracle-check':
            if not args.tolerance > 0:
                raise InvalidSweepSpec('tolerance', f"容差必须为正, 收到 {args.tolerance}")
            passed, report = run_oracle_check(args.tolerance)
            sys.stdout.write(report.to_string(index=False) + "\n")
            if args.out:
                write_table(report, args.out, args.format, 'oracle-check', {'tolerance': args.tolerance})
            return EXIT_OK if passed else EXIT_CHECK_FAILED

        if args.command == 'figure':
            spec = preset_spec(args.figure_id, _flags(args))
            command, df = run_figure(args.figure_id, spec)
            _emit(df, spec, f"figure {args.figure_id}", PLOT_COLUMNS[args.figure_id])
            curves = run_figure_curves(args.figure_id, spec)
            if curves is not None:
                if spec.out is None:
                    logger.info("附带信号曲线需要 --out 指定输出文件，已跳过")
                else:
                    out = Path(spec.out)
                    curve_spec = replace(spec, out=str(out.with_name(f"{out.stem}_curves{out.suffix}")))
                    _emit(curves, curve_spec, f"figure {args.figure_id} curves", ('phi_rad', ['signal']))
            return EXIT_OK

        spec = build_spec(_flags(args), args.config)
        if args.command == 'signal':
            df = cmd_signal(spec)
        elif args.command == 'sensitivity-surface':
            df = cmd_sensitivity_surface(spec)
        else:
            df = cmd_tmsn(spec)
        _emit(df, spec, args.command, SWEEP_PLOTS[args.command])
        return EXIT_OK

    except InvalidSweepSpec as e:
        logger.error(f"参数错误 [{e.field}]: {e}")
        return EXIT_INVALID
    except DomainError as e:
        logger.error(f"参数错误: {e}")
        return EXIT_INVALID
    except TruncationOverflow as e:
        logger.error(f"参数错误 [r]: 压缩因子过大, {e}")
        return EXIT_INVALID
    except MetrologyError as e:
        logger.error(f"计算失败: {e}")
        return EXIT_CHECK_FAILED


def main():
    """主函数"""
    sys.exit(run())


if __name__ == "__main__":
    main()
