#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  least_work_left.py

@Time    :  2025-08-12 14:32:05

@Desc    :  Least Work Left 分派: 选未完成工作量最小的服务器, 平局取编号最小
"""
from typing import Sequence

import numpy as np

from engine.sim_time import SimTime
from policies.dispatch_policy import DispatchPolicy


def lwl_select(backlog: Sequence[float] | np.ndarray) -> int:
    """返回 backlog 的 argmin, np.argmin 遇到平局返回第一个, 即编号最小"""
    return int(np.argmin(np.asarray(backlog)))


class LwlState(DispatchPolicy):
    """LWL 状态

    每台服务器只记录排空时刻 drain, backlog(now) = max(0, drain - now),
    已服务的工作量随时间自动扣减
    """

    def __init__(self, n_servers: int):
        super().__init__(n_servers)
        self._drain = np.zeros(n_servers, dtype=np.int64)

    def backlog(self, now: SimTime) -> np.ndarray:
        """各服务器在 now 时刻的未完成工作量, 纳秒"""
        return np.maximum(self._drain - now, 0)

    def select(self, now: SimTime = 0, service_ns: SimTime = 0) -> int:
        return lwl_select(self.backlog(now))

    def on_dispatch(self, server: int, now: SimTime, service_ns: SimTime) -> None:
        self._drain[server] = max(int(self._drain[server]), now) + service_ns
