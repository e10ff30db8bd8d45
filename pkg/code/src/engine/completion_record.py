#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  completion_record.py

@Time    :  2025-08-11 15:18:52

@Desc    :  每个任务的完成记录及其 CSV 导出
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import pandas as pd
from loguru import logger

from engine.sim_time import SimTime, ns_to_seconds, ns_to_str
from utils.sim_error import ExperimentIOError

RECORD_COLUMNS = ("job_id", "task_id", "arrival_s", "completion_s", "migrated", "stage1_server", "stage2_server")


@dataclass(frozen=True, slots=True)
class CompletionRecord:
    """一个任务的结果

    时间字段均为整数纳秒; 单阶段运行时 stage2_* 为 None
    """
    job_id: str
    task_id: str
    arrival: SimTime
    stage1_server: int | None
    stage2_server: int | None
    migrated: bool
    completion: SimTime
    total_service_s: float
    stage1_enqueue: SimTime
    stage1_start: SimTime
    stage1_end: SimTime
    stage2_enqueue: SimTime | None = None
    stage2_start: SimTime | None = None

    @property
    def key(self) -> tuple[str, str]:
        return self.job_id, self.task_id

    @property
    def response_s(self) -> float:
        return ns_to_seconds(self.completion - self.arrival)

    @property
    def stage1_service_ns(self) -> SimTime:
        return self.stage1_end - self.stage1_start

    @property
    def stage2_service_ns(self) -> SimTime:
        if self.stage2_start is None:
            return 0
        return self.completion - self.stage2_start


def _optional(value: int | None) -> str:
    return "" if value is None else str(value)


def export_records(records: Iterable[CompletionRecord], path: str | Path) -> Path:
    """导出完成记录, 列: job_id,task_id,arrival_s,completion_s,migrated,stage1_server,stage2_server"""
    records_path = Path(path)
    rows = [(record.job_id, record.task_id, ns_to_str(record.arrival), ns_to_str(record.completion),
             "true" if record.migrated else "false", _optional(record.stage1_server), _optional(record.stage2_server))
            for record in records]
    data_frame = pd.DataFrame(rows, columns=list(RECORD_COLUMNS))
    try:
        records_path.parent.mkdir(parents=True, exist_ok=True)
        data_frame.to_csv(records_path, index=False, encoding="utf-8", lineterminator="\n")
    except OSError as e:
        logger.error("写出完成记录 {} 失败: {}", records_path, e)
        raise ExperimentIOError(f"cannot write records {records_path}: {e}") from e
    return records_path
