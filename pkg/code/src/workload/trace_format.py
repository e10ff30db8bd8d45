#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  trace_format.py

@Time    :  2025-08-09 15:02:44

@Desc    :  trace 文件格式枚举
"""
from enum import Enum


class TraceFormat(Enum):
    """trace 文件格式"""
    CSV = ("csv", ("job_id", "task_id", "arrival_s", "cpu_gncu_s"))

    @property
    def tag(self) -> str:
        return self.value[0]

    @property
    def columns(self) -> tuple[str, ...]:
        return self.value[1]
