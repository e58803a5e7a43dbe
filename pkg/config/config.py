# 项目配置文件

import os
from pathlib import Path

# 项目根目录
PROJECT_ROOT = Path(__file__).parent.parent

# 输出目录配置
OUTPUT_PLOTS_DIR = PROJECT_ROOT / "outputs" / "plots"

# 日志配置
LOG_CONFIG = {
    "level": "INFO",
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
}

# 孪生Fock展开截断配置
TRUNCATION_CONFIG = {
    "eps_trunc": 1e-12,       # 允许丢弃的尾部概率
    "hard_cap": 4096,         # n_max 上限
    "safety_factor": 2.0,     # 几何尾界安全系数
    "norm_slack": 1e-12,      # 归一化上侧容差
}

# Legendre 多项式配置
LEGENDRE_CONFIG = {
    "clamp_slack": 1e-12,     # |x| 超出 1 的可钳位范围
    "domain_slack": 1e-9,     # 超出即视为定义域错误
}

# 灵敏度搜索配置
SENSITIVITY_CONFIG = {
    "derivative_guard": 1e-300,   # 导数低于此值记为 +inf
    "points_per_period": 4096,    # 每个信号周期的网格点数
    "refine_xtol": 1e-13,         # 黄金分割细化精度
    "hl_closeness_factor": 1.2,   # TMSN 最优灵敏度与 HL 的接近系数
}

# 分辨率指标配置
RESOLUTION_CONFIG = {
    "points_per_period": 2048,
}

# 暴力截断 Fock 空间校验配置
ORACLE_CONFIG = {
    "leak_threshold": 1e-10,  # 截断泄漏阈值
    "max_cutoff": 256,        # 格点总光子数上限
    "boundary_shells": 2,     # 计入泄漏的最外层光子数壳层
    "coherent_tail": 1e-12,   # 相干态泊松尾界
}

# 扫描执行配置
SWEEP_CONFIG = {
    "workers": min(4, os.cpu_count() or 1),
    "progress": True,
    "float_format": "%.17g",
}

# 命令行扫描默认值
SWEEP_DEFAULTS = {
    "r": (1.0, 1.0, 1),
    "delta": (0.0, 0.0, 1),
    "ell": 1,
    "phi": (0.0, 3.141592653589793, 512),
    "nc": 3.0,
    "eps_trunc": 1e-12,
    "format": "csv",
}

# 图像数据预设（figure <id> 子命令）
FIGURE_PRESETS = {
    "2": {"command": "signal", "sources": ("linear", "circular"), "ell": 1, "nc": 3.0,
          "phi": ("0", "pi", 1025)},
    "3": {"command": "sensitivity-surface", "ell": 1,
          "r": ("0.5", "1", 11), "delta": ("0", "pi/2", 21)},
    "4": {"command": "signal", "quantity": "sensitivity", "r": ("1", "1", 1), "ell": 1,
          "delta_values": ("pi/20", "pi/10", "3*pi/20", "pi/5", "0", "pi/2"),
          "phi": ("0", "pi/4", 513)},
    "5": {"command": "sensitivity-surface", "ell": 1,
          "r": ("0.5", "1", 11), "delta": ("0", "pi/2", 21)},
    "7": {"command": "sensitivity-surface", "ell": 3,
          "r": ("0.5", "1", 11), "delta": ("0", "pi/2", 21)},
    "8": {"command": "tmsn", "table": "resolution", "ell": 1, "r": ("0.5", "1.5", 21),
          "curves": {"r": ("0.5", "1.5"), "phi": ("0", "pi/2", 1025)}},
    "9": {"command": "tmsn", "table": "sensitivity", "ell": 1, "r": ("0.5", "1.5", 21)},
}
