#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  system_shape.py

@Time    :  2025-08-13 09:05:12

@Desc    :  系统形态与迁移模式枚举
"""
from enum import Enum

from utils.sim_error import ConfigurationError


class SystemShape(Enum):
    """系统形态"""
    SINGLE_STAGE = ("single_stage", "单阶段")
    TWO_STAGE = ("two_stage", "两阶段")

    @property
    def tag(self) -> str:
        return self.value[0]

    @property
    def cn_name(self) -> str:
        return self.value[1]

    @classmethod
    def covert_from_str(cls, shape_str: str) -> "SystemShape":
        if isinstance(shape_str, SystemShape):
            return shape_str
        normalized = str(shape_str).strip().lower().replace("-", "_")
        for member in cls:
            if member.tag == normalized:
                return member
        raise ConfigurationError(f"Invalid SystemShape: {shape_str}")


class MigrationMode(Enum):
    """超过阈值的任务迁移到第 2 阶段时的工作量处理方式"""
    RESUME = "resume"  # 接着做剩余工作
    RESTART = "restart"  # 从头再做

    @staticmethod
    def covert_from_str(mode_str: str) -> "MigrationMode":
        if isinstance(mode_str, MigrationMode):
            return mode_str
        try:
            return MigrationMode(str(mode_str).strip().lower())
        except ValueError as e:
            raise ConfigurationError(f"Invalid MigrationMode: {mode_str}") from e
