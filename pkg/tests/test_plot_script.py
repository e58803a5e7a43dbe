import math

import numpy as np
import pandas as pd
import pytest

from scripts.plot_figures import plot_artifact


def test_plot_signal_curves(tmp_path):
    phis = np.linspace(0.0, math.pi, 50)
    df = pd.DataFrame({
        'source': ['linear'] * 50 + ['circular'] * 50,
        'r': math.nan,
        'delta_rad': math.nan,
        'phi_rad': np.concatenate([phis, phis]),
        'signal': np.concatenate([np.exp(-3 * np.sin(2 * phis) ** 2), np.exp(-6 * np.sin(2 * phis) ** 2)]),
    })
    csv_path = tmp_path / "curves.csv"
    df.to_csv(csv_path, index=False)
    png = plot_artifact(csv_path, tmp_path / "curves.png")
    assert png.exists() and png.stat().st_size > 0


def test_plot_surface(tmp_path):
    rs, deltas = np.meshgrid(np.linspace(0.5, 1.0, 3), np.linspace(0.0, math.pi / 2, 4), indexing='ij')
    df = pd.DataFrame({'r': rs.ravel(), 'delta_rad': deltas.ravel(),
                       'hl_minus_delta_phi_rad': (rs * np.cos(deltas)).ravel()})
    csv_path = tmp_path / "surface.csv"
    df.to_csv(csv_path, index=False)
    assert plot_artifact(csv_path, tmp_path / "surface.png").exists()


def test_plot_rejects_unknown_table(tmp_path):
    csv_path = tmp_path / "other.csv"
    pd.DataFrame({'a': [1, 2]}).to_csv(csv_path, index=False)
    with pytest.raises(ValueError):
        plot_artifact(csv_path, tmp_path / "other.png")


def test_plot_curves_grouped_by_squeezing(tmp_path):
    phis = np.linspace(0.0, math.pi / 2, 40)
    df = pd.DataFrame({
        'r': [0.5] * 40 + [1.5] * 40,
        'ell': 1,
        'phi_rad': np.concatenate([phis, phis]),
        'signal': np.concatenate([np.cos(4 * phis), np.cos(4 * phis) ** 3]),
    })
    csv_path = tmp_path / "figure8_curves.csv"
    df.to_csv(csv_path, index=False)
    assert plot_artifact(csv_path, tmp_path / "curves.png").exists()
