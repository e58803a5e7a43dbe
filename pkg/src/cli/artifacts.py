"""
结果文件输出
CSV 使用固定的 17 位有效数字格式，JSON 与 CSV 记录一一对应，可附带 gnuplot 脚本
"""

import io
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from config.config import SWEEP_CONFIG

logger = logging.getLogger(__name__)


def _json_value(value: Any) -> Any:
    if isinstance(value, float):
        if math.isnan(value):
            return None
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
    if hasattr(value, 'item'):
        return _json_value(value.item())
    return value


def table_to_records(df: pd.DataFrame) -> List[Dict[str, Any]]:
    return [{k: _json_value(v) for k, v in row.items()} for row in df.to_dict(orient='records')]


def render_table(df: pd.DataFrame, fmt: str, command: str,
                 metadata: Optional[Dict[str, Any]] = None) -> str:
    """把结果表渲染成 csv 或 json 文本"""
    if fmt == 'csv':
        buffer = io.StringIO()
        df.to_csv(buffer, index=False, float_format=SWEEP_CONFIG['float_format'], lineterminator='\n')
        return buffer.getvalue()
    payload = {
        'command': command,
        'metadata': {k: _json_value(v) for k, v in (metadata or {}).items()},
        'records': table_to_records(df),
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + '\n'


def write_table(df: pd.DataFrame, out: Optional[str], fmt: str, command: str,
                metadata: Optional[Dict[str, Any]] = None) -> Optional[Path]:
    """
    写出结果表，out 为空时写到标准输出

    Returns:
        写出的文件路径，标准输出时为 None
    """
    text = render_table(df, fmt, command, metadata)
    if out is None:
        sys.stdout.write(text)
        return None
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    logger.info(f"结果已保存到: {path} ({len(df)} 行)")
    return path


def write_gnuplot_stub(data_path: Path, x_col: str, y_cols: List[str], columns: List[str]) -> Path:
    """生成读取 CSV 的 gnuplot 脚本，文件名为 <data>.gp"""
    script_path = data_path.with_suffix(data_path.suffix + '.gp')
    lines = [
        "set datafile separator ','",
        "set key autotitle columnhead",
        f"set xlabel '{x_col}'",
        "set terminal pngcairo size 900,600",
        f"set output '{data_path.stem}.png'",
    ]
    x_idx = columns.index(x_col) + 1
    plots = [f"'{data_path.name}' using {x_idx}:{columns.index(y) + 1} with lines" for y in y_cols]
    lines.append("plot " + ", \\\n     ".join(plots))
    script_path.write_text("\n".join(lines) + "\n", encoding='utf-8')
    logger.info(f"gnuplot 脚本已保存到: {script_path}")
    return script_path
