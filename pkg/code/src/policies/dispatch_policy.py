#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  dispatch_policy.py

@Time    :  2025-08-12 09:48:10

@Desc    :  分派策略协议: select 选服务器, 引擎通过 on_dispatch / on_idle 回传状态
"""
from abc import ABC, abstractmethod

from engine.sim_time import SimTime


class DispatchPolicy(ABC):
    """分派策略基类, 状态只属于一次仿真运行"""

    def __init__(self, n_servers: int):
        if n_servers < 1:
            raise ValueError(f"a dispatcher needs at least one server, got {n_servers}")
        self._n_servers = n_servers

    @property
    def n_servers(self) -> int:
        return self._n_servers

    @abstractmethod
    def select(self, now: SimTime, service_ns: SimTime) -> int:
        """为到达的任务选择服务器
        Args:
            now: 当前时刻
            service_ns: 任务在该阶段将占用服务器的时间, 只有 size-aware 策略使用
        Returns:
            int: 服务器编号
        """

    def on_dispatch(self, server: int, now: SimTime, service_ns: SimTime) -> None:
        """任务已放入 server 的队列"""

    def on_idle(self, server: int) -> None:
        """server 处理完最后一个排队任务, 变为空闲"""
