#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  join_idle_queue.py

@Time    :  2025-08-12 11:03:27

@Desc    :  Join Idle Queue 分派: 优先交给编号最小的空闲服务器
"""
import heapq

import numpy as np

from engine.sim_time import SimTime
from policies.dispatch_policy import DispatchPolicy
from policies.policy_type import JiqFallback


class JiqState(DispatchPolicy):
    """JIQ 状态

    idle_set 由服务器变空闲时主动登记 (pull 模式); 仿真开始时所有服务器都空闲
    """

    def __init__(self, n_servers: int, fallback_rng: np.random.Generator,
                 fallback_mode: JiqFallback = JiqFallback.RANDOM, initially_idle: bool = True):
        super().__init__(n_servers)
        self._fallback_rng = fallback_rng
        self._fallback_mode = fallback_mode
        self._fallback_cursor = 0
        self._idle_heap: list[int] = list(range(n_servers)) if initially_idle else []
        self._is_idle = [initially_idle] * n_servers

    @property
    def idle_set(self) -> list[int]:
        return sorted(self._idle_heap)

    @property
    def fallback_mode(self) -> JiqFallback:
        return self._fallback_mode

    def select(self, now: SimTime = 0, service_ns: SimTime = 0) -> int:
        return jiq_select(self)

    def on_idle(self, server: int) -> None:
        jiq_notify_idle(self, server)

    def pop_idle(self) -> int | None:
        """取出编号最小的空闲服务器, 没有空闲服务器时返回 None"""
        if not self._idle_heap:
            return None
        server = heapq.heappop(self._idle_heap)
        self._is_idle[server] = False
        return server

    def push_idle(self, server: int) -> None:
        # 重复登记不做任何事
        if self._is_idle[server]:
            return
        self._is_idle[server] = True
        heapq.heappush(self._idle_heap, server)

    def fallback(self) -> int:
        """没有空闲服务器时的兜底选择"""
        if self._fallback_mode is JiqFallback.ROUND_ROBIN:
            selected = self._fallback_cursor
            self._fallback_cursor = (self._fallback_cursor + 1) % self._n_servers
            return selected
        return int(self._fallback_rng.integers(self._n_servers))


def jiq_select(state: JiqState) -> int:
    server = state.pop_idle()
    return state.fallback() if server is None else server


def jiq_notify_idle(state: JiqState, server: int) -> JiqState:
    state.push_idle(server)
    return state
