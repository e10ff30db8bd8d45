#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  point_pool.py

@Time    :  2025-08-16 16:48:27

@Desc    :  网格点并行执行: 每个点是独立的单线程仿真, 结果按提交顺序收集
"""
import multiprocessing
import sys
from pathlib import Path
from typing import Iterable

from loguru import logger

from experiments.run_point import RunPoint, RunResult, execute_point
from workload.synthetic import SyntheticSpec, generate_synthetic
from workload.task import Workload
from workload.trace_loader import load_trace


class WorkloadProvider:
    """按种子提供负载

    trace 负载固定不变, 种子只影响 JIQ 兜底随机流; 合成负载的种子就是重复实验的种子
    """

    def __init__(self, source: SyntheticSpec | str | Path, time_scale: float = 1.0):
        self._source = source
        self._time_scale = time_scale
        self._cached_seed: int | None = None
        self._cached: tuple[Workload, str] | None = None

    @property
    def is_synthetic(self) -> bool:
        return isinstance(self._source, SyntheticSpec)

    def workload_for(self, seed: int) -> tuple[Workload, str]:
        """返回 (负载, 指纹), 只缓存最近一个种子的负载"""
        if self._cached is not None and (not self.is_synthetic or self._cached_seed == seed):
            return self._cached
        if self.is_synthetic:
            workload = generate_synthetic(self._source.with_seed(seed))
        else:
            workload = load_trace(self._source, time_scale=self._time_scale)
        self._cached_seed = seed
        self._cached = (workload, workload.fingerprint())
        return self._cached


_worker_provider: WorkloadProvider | None = None


def _init_worker(provider: WorkloadProvider, log_level: str) -> None:
    global _worker_provider
    _worker_provider = provider
    logger.remove()
    logger.add(sys.stderr, level=log_level)


def _run_in_worker(point: RunPoint) -> RunResult:
    workload, fingerprint = _worker_provider.workload_for(point.seed)
    return execute_point(point, workload, fingerprint)


def run_points(points: Iterable[RunPoint],
               provider: WorkloadProvider,
               workers: int = 1,
               log_level: str = "INFO") -> list[RunResult]:
    """执行所有网格点

    Args:
        points: 网格点, 建议按种子排好序以复用负载
        provider: 负载来源
        workers: 进程数, 1 时在当前进程内顺序执行
        log_level: 子进程的日志级别
    Returns:
        list[RunResult]: 与 points 顺序一致的结果
    """
    points = list(points)
    logger.info("共 {} 个网格点, {} 个进程", len(points), workers)
    if workers <= 1 or len(points) <= 1:
        results = []
        for point in points:
            workload, fingerprint = provider.workload_for(point.seed)
            results.append(execute_point(point, workload, fingerprint))
        return results

    with multiprocessing.Pool(processes=min(workers, len(points)), initializer=_init_worker,
                              initargs=(provider, log_level)) as pool:
        return list(pool.imap(_run_in_worker, points, chunksize=1))
