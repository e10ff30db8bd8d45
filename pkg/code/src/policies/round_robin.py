#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  round_robin.py

@Time    :  2025-08-12 10:20:46

@Desc    :  Round Robin 分派, 从 0 号服务器开始循环
"""
from engine.sim_time import SimTime
from policies.dispatch_policy import DispatchPolicy


class RoundRobinState(DispatchPolicy):

    def __init__(self, n_servers: int):
        super().__init__(n_servers)
        self._next_index = 0

    @property
    def next_index(self) -> int:
        return self._next_index

    @next_index.setter
    def next_index(self, value: int) -> None:
        self._next_index = value % self._n_servers

    def select(self, now: SimTime = 0, service_ns: SimTime = 0) -> int:
        return rr_select(self)


def rr_select(state: RoundRobinState) -> int:
    """返回游标所指的服务器, 游标循环后移"""
    selected = state.next_index
    state.next_index = selected + 1
    return selected
