#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  experiment_kind.py

@Time    :  2025-08-16 09:12:40

@Desc    :  实验类型枚举
"""
from enum import Enum

from utils.sim_error import ConfigurationError


class ExperimentKind(Enum):
    """实验类型, value 为 (配置文件中的标签, 命令行子命令, 中文名)"""
    SINGLE_RUN = ("single_run", "simulate", "单次运行")
    SWEEP_LOAD = ("sweep_load", "sweep-load", "负载扫描")
    SWEEP_SERVERS = ("sweep_servers", "sweep-servers", "服务器数扫描")
    SWEEP_THETA = ("sweep_theta", "sweep-theta", "阈值扫描")
    COMPARE = ("compare", "compare", "架构对比")

    @property
    def tag(self) -> str:
        return self.value[0]

    @property
    def command(self) -> str:
        return self.value[1]

    @property
    def cn_name(self) -> str:
        return self.value[2]

    @classmethod
    def covert_from_str(cls, kind_str: str) -> "ExperimentKind":
        """接受配置标签 (sweep_load) 或子命令名 (sweep-load)"""
        if isinstance(kind_str, ExperimentKind):
            return kind_str
        normalized = str(kind_str).strip().lower()
        for member in cls:
            if normalized in (member.tag, member.command):
                return member
        raise ConfigurationError(f"Invalid ExperimentKind: {kind_str}")
