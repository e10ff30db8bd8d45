#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  job_metrics.py

@Time    :  2025-08-15 10:26:44

@Desc    :  作业级指标: 平均响应时间 (MRT) 与平均作业减速比 (MJS)
"""
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable

import numpy as np
import pandas as pd
from loguru import logger

from engine.completion_record import CompletionRecord
from engine.server import ServerState
from engine.sim_time import NS_PER_SECOND, SimTime, service_ns
from utils.sim_error import ExperimentIOError, ValidationFailure
from workload.task import Workload

JOB_COLUMNS = ("job_id", "first_arrival_s", "last_completion_s", "response_s", "max_task_service_s", "slowdown")


@dataclass(frozen=True, slots=True)
class JobRecord:
    """一个作业的汇总, 时间单位为秒"""
    job_id: str
    first_arrival: float
    last_completion: float
    max_task_service: float

    @property
    def response(self) -> float:
        return self.last_completion - self.first_arrival

    @property
    def slowdown(self) -> float:
        return self.response / self.max_task_service


@dataclass(frozen=True, slots=True)
class MetricsSummary:
    """一次运行的作业级指标

    Attributes:
        mrt: 各作业响应时间的算术平均, 秒
        mjs: 各作业减速比的算术平均
        job_count: 作业数
        task_count: 任务数
        p50_r / p90_r / p99_r: 作业响应时间分位数, 秒
        p50_s / p90_s / p99_s: 作业减速比分位数
    """
    mrt: float
    mjs: float
    job_count: int
    task_count: int
    p50_r: float
    p90_r: float
    p99_r: float
    p50_s: float
    p90_s: float
    p99_s: float

    def to_mapping(self) -> dict:
        return asdict(self)


def _job_frame(records: Iterable[CompletionRecord], workload: Workload, speed: float) -> pd.DataFrame:
    by_key = {record.key: record for record in records}
    job_ids, arrivals, completions, services = [], [], [], []
    for task in workload:
        record = by_key.get(task.key)
        if record is None:
            logger.error("任务 {}/{} 没有完成记录", task.job_id, task.task_id)
            raise ValidationFailure(f"missing record for task {task.job_id}/{task.task_id}")
        job_ids.append(task.job_id)
        arrivals.append(record.arrival)
        completions.append(record.completion)
        # 分母取第 1 阶段速率下取整后的服务时间, 与引擎实际服务的纳秒数一致
        services.append(service_ns(task.cpu_demand, speed))

    task_frame = pd.DataFrame({"job_id": job_ids,
                               "arrival": np.asarray(arrivals, dtype=np.int64),
                               "completion": np.asarray(completions, dtype=np.int64),
                               "service": np.asarray(services, dtype=np.int64)})
    jobs = task_frame.groupby("job_id", sort=False).agg(first_arrival=("arrival", "min"),
                                                        last_completion=("completion", "max"),
                                                        max_service=("service", "max"))
    jobs["response"] = jobs["last_completion"] - jobs["first_arrival"]
    jobs["slowdown"] = jobs["response"] / jobs["max_service"]
    return jobs


def job_records(records: Iterable[CompletionRecord], workload: Workload, speed: float) -> list[JobRecord]:
    jobs = _job_frame(records, workload, speed)
    return [JobRecord(job_id=str(job_id),
                      first_arrival=row.first_arrival / NS_PER_SECOND,
                      last_completion=row.last_completion / NS_PER_SECOND,
                      max_task_service=row.max_service / NS_PER_SECOND)
            for job_id, row in zip(jobs.index, jobs.itertuples(index=False))]


def aggregate(records: Iterable[CompletionRecord],
              workload: Workload,
              speed: float,
              stage2_speed: float | None = None) -> MetricsSummary:
    """把任务完成记录汇总为作业级指标

    R_j = 最后一个任务完成时刻 - 第一个任务到达时刻, S_j = R_j / max_i X_ij

    Args:
        records: 每个任务一条完成记录
        workload: 本次运行的负载
        speed: 运行配置的 μ (两阶段时为第 1 阶段速率)
        stage2_speed: 第 2 阶段速率, 默认与 speed 相同
    Returns:
        MetricsSummary: 作业级指标
    Raises:
        ValidationFailure: 缺少完成记录, 或两阶段速率相同时出现 S_j < 1
    """
    jobs = _job_frame(records, workload, speed)
    response_s = jobs["response"].to_numpy(dtype=np.float64) / NS_PER_SECOND
    slowdown = jobs["slowdown"].to_numpy(dtype=np.float64)
    if slowdown.min() < 1.0:
        if stage2_speed is None or stage2_speed == speed:
            logger.error("存在减速比小于 1 的作业 (min={})", slowdown.min())
            raise ValidationFailure(f"job slowdown below 1: {slowdown.min()}")
        logger.warning("存在减速比小于 1 的作业 (min={}), 第 2 阶段速率更快", slowdown.min())

    r50, r90, r99 = np.percentile(response_s, [50, 90, 99])
    s50, s90, s99 = np.percentile(slowdown, [50, 90, 99])
    return MetricsSummary(mrt=float(response_s.mean()),
                          mjs=float(slowdown.mean()),
                          job_count=len(jobs),
                          task_count=len(workload),
                          p50_r=float(r50), p90_r=float(r90), p99_r=float(r99),
                          p50_s=float(s50), p90_s=float(s90), p99_s=float(s99))


def job_table(records: Iterable[CompletionRecord], workload: Workload, speed: float) -> pd.DataFrame:
    """按作业输出的辅助表, 每个 JobRecord 一行, 列见 JOB_COLUMNS"""
    rows = [(job.job_id, job.first_arrival, job.last_completion, job.response, job.max_task_service, job.slowdown)
            for job in job_records(records, workload, speed)]
    return pd.DataFrame(rows, columns=list(JOB_COLUMNS))


def utilization(server_states: Iterable[ServerState], horizon_ns: SimTime) -> pd.DataFrame:
    """每台服务器的忙碌比例 busy_ns / horizon_ns, 仅用于校验输出"""
    rows = [(server.stage, server.id, server.busy_ns / NS_PER_SECOND, server.served_count,
             server.busy_ns / horizon_ns if horizon_ns > 0 else 0.0)
            for server in server_states]
    return pd.DataFrame(rows, columns=["stage", "server", "busy_s", "served", "utilization"])


def write_frame(frame: pd.DataFrame, path: str | Path) -> Path:
    frame_path = Path(path)
    try:
        frame_path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(frame_path, index=False, encoding="utf-8", lineterminator="\n")
    except OSError as e:
        logger.error("写出 {} 失败: {}", frame_path, e)
        raise ExperimentIOError(f"cannot write {frame_path}: {e}") from e
    return frame_path
