#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  server.py

@Time    :  2025-08-11 14:40:09

@Desc    :  服务器状态, 服务器内部按 FCFS 调度
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Any

from engine.sim_time import SimTime


@dataclass(slots=True)
class ServerState:
    """单台服务器

    Attributes:
        id: 阶段内的服务器编号
        stage: 所在阶段, 单阶段系统的服务器记为第 1 阶段
        speed: 速率 μ, GNCU
        queue: 等待中的任务, 先到先服务
        in_service: 正在服务的任务, 空闲时为 None
        service_start: 当前任务开始服务的时刻
        busy_ns: 累计忙碌时间
        served_count: 已完成的服务次数 (迁移任务在第 1 阶段的切片也算一次)
    """
    id: int
    stage: int
    speed: float
    queue: deque = field(default_factory=deque)
    in_service: Any = None
    service_start: SimTime = 0
    busy_ns: SimTime = 0
    served_count: int = 0

    @property
    def is_idle(self) -> bool:
        return self.in_service is None

    @property
    def key(self) -> tuple[int, int]:
        return self.stage, self.id
