"""
领域异常定义
所有数值模块抛出的错误都继承自 MetrologyError，命令行据此映射退出码
"""

from typing import Optional


class MetrologyError(Exception):
    """仿真系统异常基类"""


class DomainError(MetrologyError, ValueError):
    """参数超出有效定义域"""


class TruncationOverflow(MetrologyError):
    """截断阶数达到上限仍未满足尾部概率容差"""


class SearchFailure(MetrologyError):
    """灵敏度搜索网格上全部为 +inf 哨兵值"""


class MetricUndefined(MetrologyError):
    """分辨率指标在退化曲线上无定义"""


class LeakageExceeded(MetrologyError):
    """截断 Fock 格点的概率泄漏超过阈值"""


class InvalidSweepSpec(MetrologyError, ValueError):
    """扫描参数无效，field 指出出错字段"""

    def __init__(self, field: str, message: str, value: Optional[object] = None):
        self.field = field
        self.value = value
        super().__init__(f"{field}: {message}")
