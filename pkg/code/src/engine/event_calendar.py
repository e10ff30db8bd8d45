#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  event_calendar.py

@Time    :  2025-08-11 11:26:40

@Desc    :  事件日历, 按 (时间, 事件优先级, 序号) 出队
"""
import heapq
from enum import Enum
from typing import Any, NamedTuple

from engine.sim_time import SimTime, check_sim_time


class EventKind(Enum):
    """事件类型, value 为 (名称, 同一时刻的优先级), 优先级小的先处理"""
    SERVICE_COMPLETION = ("service_completion", 0)
    STAGE_CUTOFF = ("stage_cutoff", 0)
    MIGRATION_ARRIVAL = ("migration_arrival", 1)
    TASK_ARRIVAL = ("task_arrival", 2)

    @property
    def tag(self) -> str:
        return self.value[0]

    @property
    def priority(self) -> int:
        return self.value[1]


class Event(NamedTuple):
    time: SimTime
    priority: int
    seq: int
    kind: EventKind
    payload: Any


class EventCalendar:
    """基于 heapq 的事件日历

    seq 单调递增且唯一, 元组比较不会走到 kind / payload
    """

    def __init__(self):
        self._heap: list[Event] = []
        self._seq = 0
        self._now: SimTime = 0
        self._popped = 0

    def schedule(self, time: SimTime, kind: EventKind, payload: Any = None) -> Event:
        if time < self._now:
            raise ValueError(f"cannot schedule {kind.tag} at {time} ns before now={self._now} ns")
        event = Event(check_sim_time(time), kind.priority, self._seq, kind, payload)
        self._seq += 1
        heapq.heappush(self._heap, event)
        return event

    def pop(self) -> Event:
        event = heapq.heappop(self._heap)
        self._now = event.time
        self._popped += 1
        return event

    @property
    def now(self) -> SimTime:
        return self._now

    @property
    def processed(self) -> int:
        return self._popped

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)
