#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  task.py

@Time    :  2025-08-09 14:20:05

@Desc    :  任务与负载 (按到达时间排序的任务流)
"""
import hashlib
from dataclasses import dataclass
from operator import attrgetter
from typing import Iterable, Iterator

from utils.sim_error import ConfigurationError


@dataclass(frozen=True, slots=True)
class Task:
    """一个任务 (实例)

    Attributes:
        job_id: 所属作业标识
        task_id: 作业内的任务标识
        arrival: 到达时刻, 秒 (A_ij)
        cpu_demand: CPU 需求, GNCU 秒 (C_ij)
    """
    job_id: str
    task_id: str
    arrival: float
    cpu_demand: float

    def __post_init__(self):
        if not self.arrival >= 0:
            raise ConfigurationError(f"negative arrival {self.arrival} for task {self.key}")
        if not self.cpu_demand > 0:
            raise ConfigurationError(f"non-positive demand {self.cpu_demand} for task {self.key}")

    @property
    def key(self) -> tuple[str, str]:
        return self.job_id, self.task_id


class Workload:
    """不可变的任务流, 构造时按到达时间稳定排序"""

    def __init__(self, tasks: Iterable[Task]):
        # sorted 是稳定排序, 同一时刻到达的任务保持输入顺序
        self._tasks = tuple(sorted(tasks, key=attrgetter("arrival")))
        if not self._tasks:
            raise ConfigurationError("workload is empty")

        seen = set()
        for task in self._tasks:
            if task.key in seen:
                raise ConfigurationError(f"duplicate task {task.job_id}/{task.task_id}")
            seen.add(task.key)

    @property
    def tasks(self) -> tuple[Task, ...]:
        return self._tasks

    def fingerprint(self) -> str:
        """计算负载指纹, 用于判断两组实验是否使用同一份负载
        Returns:
            str: SHA-256 十六进制摘要
        """
        digest = hashlib.sha256()
        for task in self._tasks:
            digest.update(f"{task.job_id}\x1f{task.task_id}\x1f{task.arrival!r}\x1f{task.cpu_demand!r}\n".encode())
        return digest.hexdigest()

    def __len__(self) -> int:
        return len(self._tasks)

    def __iter__(self) -> Iterator[Task]:
        return iter(self._tasks)

    def __getitem__(self, index: int) -> Task:
        return self._tasks[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Workload):
            return NotImplemented
        return self._tasks == other._tasks

    def __hash__(self):
        return hash(self._tasks)

    def __str__(self):
        return f"Workload(tasks={len(self._tasks)}, first={self._tasks[0].arrival}, last={self._tasks[-1].arrival})"
