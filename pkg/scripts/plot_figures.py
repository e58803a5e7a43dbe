#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
图像绘制脚本

读取 `main.py figure <id>` 或扫描命令写出的 CSV，按列自动选择绘图方式：
1. 含 phi_rad 的曲线表按 (source, delta_rad) 分组画折线
2. 含 r 与 delta_rad 的曲面表画热图
3. 只含 r 的 TMSN 表画多列折线

使用方法：
python scripts/plot_figures.py outputs/data/figure7.csv [outputs/plots/figure7.png]
"""

import sys
from pathlib import Path

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import pandas as pd

sys.path.append(str(Path(__file__).parent.parent))
from config.config import OUTPUT_PLOTS_DIR

plt.rcParams['axes.unicode_minus'] = False

SURFACE_VALUE_COLUMNS = ('hl_minus_delta_phi_rad', 'delta_phi_opt_rad')
TMSN_VALUE_COLUMNS = ('visibility', 'fwhm_rad', 'delta_phi_opt_rad', 'hl_rad')


def _plot_curves(df: pd.DataFrame, ax):
    value_col = 'delta_phi_rad' if 'delta_phi_rad' in df.columns else 'signal'
    keys = [c for c in ('source', 'r', 'delta_rad') if c in df.columns]
    for key, group in df.groupby(keys, dropna=False, sort=False):
        key = key if isinstance(key, tuple) else (key,)
        label = ', '.join(f"{k}={v:.4g}" if isinstance(v, float) else f"{k}={v}"
                          for k, v in zip(keys, key) if not (isinstance(v, float) and pd.isna(v)))
        ax.plot(group['phi_rad'], group[value_col], label=label)
    ax.set_xlabel('phi (rad)')
    ax.set_ylabel(value_col)
    ax.legend(fontsize=8)


def _plot_surface(df: pd.DataFrame, ax, fig):
    value_col = next(c for c in SURFACE_VALUE_COLUMNS if c in df.columns)
    grid = df.pivot(index='r', columns='delta_rad', values=value_col)
    mesh = ax.pcolormesh(grid.columns.values, grid.index.values, grid.values, shading='auto')
    fig.colorbar(mesh, ax=ax, label=value_col)
    ax.set_xlabel('delta (rad)')
    ax.set_ylabel('r')


def _plot_tmsn(df: pd.DataFrame, ax):
    for col in TMSN_VALUE_COLUMNS:
        if col in df.columns:
            ax.plot(df['r'], df[col], marker='o', markersize=3, label=col)
    ax.set_xlabel('r')
    ax.legend(fontsize=8)


def plot_artifact(csv_path, png_path=None) -> Path:
    """
    绘制单个结果文件

    Args:
        csv_path: CSV 结果文件
        png_path: 输出图片路径，默认写到 outputs/plots/<文件名>.png

    Returns:
        图片路径
    """
    csv_path = Path(csv_path)
    png_path = Path(png_path) if png_path else OUTPUT_PLOTS_DIR / f"{csv_path.stem}.png"
    png_path.parent.mkdir(parents=True, exist_ok=True)

    df = pd.read_csv(csv_path)
    fig, ax = plt.subplots(figsize=(8, 5))
    if 'phi_rad' in df.columns:
        _plot_curves(df, ax)
    elif {'r', 'delta_rad'} <= set(df.columns):
        _plot_surface(df, ax, fig)
    elif 'r' in df.columns:
        _plot_tmsn(df, ax)
    else:
        plt.close(fig)
        raise ValueError(f"无法识别的结果表: {list(df.columns)}")

    ax.set_title(csv_path.stem)
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    print(f"图片已保存到: {png_path}")
    return png_path


def main():
    if len(sys.argv) < 2:
        print(__doc__)
        sys.exit(2)
    plot_artifact(sys.argv[1], sys.argv[2] if len(sys.argv) > 2 else None)


if __name__ == "__main__":
    main()
