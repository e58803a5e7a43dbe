# 工具函数模块
from .exceptions import (
    MetrologyError,
    DomainError,
    TruncationOverflow,
    SearchFailure,
    MetricUndefined,
    LeakageExceeded,
    InvalidSweepSpec,
)

__all__ = [
    'MetrologyError',
    'DomainError',
    'TruncationOverflow',
    'SearchFailure',
    'MetricUndefined',
    'LeakageExceeded',
    'InvalidSweepSpec',
]
