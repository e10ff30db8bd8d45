#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  trace_loader.py

@Time    :  2025-08-09 15:10:27

@Desc    :  trace CSV 读取与写出 (job_id,task_id,arrival_s,cpu_gncu_s)
"""
import io
import math
from pathlib import Path

import pandas as pd
from loguru import logger

from utils.sim_error import ConfigurationError, ExperimentIOError, TraceFormatError
from workload.task import Task, Workload
from workload.trace_format import TraceFormat


def _parse_float(raw: str) -> float:
    """逐个字段转换, 与 Python float 精确一致; 无法解析时返回 NaN"""
    try:
        return float(raw)
    except (TypeError, ValueError):
        return math.nan


def _strip_comment_lines(text: str) -> str:
    """只去掉以 # 开头的整行, 字段内的 # 属于 id 本身"""
    return "".join(line for line in text.splitlines(keepends=True) if not line.lstrip().startswith("#"))


def _first_bad_row(mask: pd.Series) -> int:
    """返回第一个出错的数据行号 (从 1 开始, 不含表头和注释行)"""
    return int(mask.to_numpy().nonzero()[0][0]) + 1


def load_trace(path: str | Path,
               trace_format: TraceFormat = TraceFormat.CSV,
               time_scale: float = 1.0) -> Workload:
    """读取 trace 文件并构造负载

    Args:
        path: trace 文件路径
        trace_format: 文件格式, 目前只有 CSV
        time_scale: 到达时间的乘数, 用于 trace 时间单位不是秒的情况
    Returns:
        Workload: 按到达时间稳定排序后的负载
    Raises:
        ExperimentIOError: 文件不存在或无法读取
        TraceFormatError: 空文件、表头错误、行格式错误、CPU 需求非正等
    """
    if not time_scale > 0 or not math.isfinite(time_scale):
        raise ConfigurationError(f"time_scale must be a positive finite number, got {time_scale}")

    trace_path = Path(path)
    if not trace_path.is_file():
        logger.error("trace 文件 {} 不存在", trace_path)
        raise ExperimentIOError(f"trace file not found: {trace_path}")

    columns = list(trace_format.columns)
    try:
        content = _strip_comment_lines(trace_path.read_text(encoding="utf-8-sig"))
    except (OSError, UnicodeDecodeError) as e:
        raise ExperimentIOError(f"cannot read trace {trace_path}: {e}") from e
    try:
        data_frame = pd.read_csv(io.StringIO(content), dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError as e:
        raise TraceFormatError(f"empty trace file: {trace_path}") from e
    except pd.errors.ParserError as e:
        raise TraceFormatError(f"malformed trace {trace_path}: {e}") from e

    if list(data_frame.columns) != columns:
        raise TraceFormatError(f"unexpected header {list(data_frame.columns)}, expected {columns}")
    if data_frame.empty:
        raise TraceFormatError(f"empty trace file: {trace_path}")

    missing = (data_frame[columns].isna() | (data_frame[columns] == "")).any(axis=1)
    if missing.any():
        row = _first_bad_row(missing)
        raise TraceFormatError(f"malformed row {row}: missing field", row)

    arrivals = data_frame["arrival_s"].map(_parse_float)
    demands = data_frame["cpu_gncu_s"].map(_parse_float)

    unparsable = arrivals.isna() | demands.isna() | ~arrivals.map(math.isfinite) | ~demands.map(math.isfinite)
    if unparsable.any():
        row = _first_bad_row(unparsable)
        raise TraceFormatError(f"malformed row {row}: non-numeric or non-finite value", row)

    non_positive = demands <= 0
    if non_positive.any():
        row = _first_bad_row(non_positive)
        raise TraceFormatError(f"non-positive demand at row {row}", row)

    negative = arrivals < 0
    if negative.any():
        row = _first_bad_row(negative)
        raise TraceFormatError(f"negative arrival at row {row}", row)

    duplicated = data_frame.duplicated(subset=["job_id", "task_id"])
    if duplicated.any():
        row = _first_bad_row(duplicated)
        raise TraceFormatError(f"duplicate task at row {row}", row)

    if time_scale != 1.0:
        arrivals = arrivals * time_scale

    tasks = [Task(job_id, task_id, arrival, demand)
             for job_id, task_id, arrival, demand in zip(data_frame["job_id"], data_frame["task_id"],
                                                         arrivals.tolist(), demands.tolist())]
    workload = Workload(tasks)
    logger.info("读取 trace {} 完成, 共 {} 个任务", trace_path, len(workload))
    return workload


def write_trace(workload: Workload, path: str | Path, trace_format: TraceFormat = TraceFormat.CSV) -> Path:
    """将负载写出为 trace 文件, 浮点数使用最短可往返表示

    Args:
        workload: 负载
        path: 输出路径
        trace_format: 文件格式
    Returns:
        Path: 写出的文件路径
    """
    trace_path = Path(path)
    data_frame = pd.DataFrame({
        "job_id": [task.job_id for task in workload],
        "task_id": [task.task_id for task in workload],
        "arrival_s": [repr(task.arrival) for task in workload],
        "cpu_gncu_s": [repr(task.cpu_demand) for task in workload],
    }, columns=list(trace_format.columns))

    try:
        trace_path.parent.mkdir(parents=True, exist_ok=True)
        data_frame.to_csv(trace_path, index=False, encoding="utf-8", lineterminator="\n")
    except OSError as e:
        logger.error("写出 trace {} 失败: {}", trace_path, e)
        raise ExperimentIOError(f"cannot write trace {trace_path}: {e}") from e

    logger.info("写出 trace {} 完成, 共 {} 个任务", trace_path, len(workload))
    return trace_path
