#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  sim_error.py

@Time    :  2025-08-09 10:12:31

@Desc    :  仿真器异常定义, 每类异常对应一个命令行退出码
"""


class SimulationError(Exception):
    """仿真器异常基类"""

    exit_code = 1


class ConfigurationError(SimulationError, ValueError):
    """配置 / 参数 / 命令行错误"""

    exit_code = 2


class TraceFormatError(ConfigurationError):
    """trace 文件格式错误, 消息中带有出错的数据行号"""

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self._row = row

    @property
    def row(self) -> int | None:
        return self._row


class WorkloadStatsError(ConfigurationError):
    """负载统计量无法计算 (例如所有任务同时到达, λ 无定义)"""


class SimTimeOverflowError(SimulationError, ArithmeticError):
    """仿真时钟超出 64 位纳秒范围"""

    exit_code = 1


class ValidationFailure(SimulationError):
    """运行校验不通过, 或固定预算检查失败"""

    exit_code = 1

    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self._violations = violations or []

    @property
    def violations(self) -> list[str]:
        return self._violations


class ExperimentIOError(SimulationError, OSError):
    """trace / 配置 / 结果文件读写失败"""

    exit_code = 3
