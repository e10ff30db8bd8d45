#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  validation.py

@Time    :  2025-08-14 15:47:20

@Desc    :  运行结果校验: 守恒, FCFS, 服务区间不重叠, 工作量守恒
"""
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from loguru import logger

from engine.completion_record import CompletionRecord
from engine.server import ServerState
from engine.sim_time import SimTime
from utils.sim_error import ValidationFailure
from workload.task import Workload

_REPORT_LIMIT = 20


class _Interval(NamedTuple):
    start: SimTime
    end: SimTime
    enqueue: SimTime
    key: tuple[str, str]


@dataclass(slots=True)
class ValidationReport:
    """校验报告, violations 为空表示通过"""
    violations: list[str] = field(default_factory=list)

    @property
    def is_clean(self) -> bool:
        return not self.violations

    def add(self, violation: str) -> None:
        self.violations.append(violation)

    def raise_if_dirty(self) -> None:
        if self.violations:
            logger.error("运行校验失败, 共 {} 项违规", len(self.violations))
            raise ValidationFailure(str(self), self.violations)

    def __str__(self):
        if self.is_clean:
            return "validation: clean"
        lines = [f"validation: {len(self.violations)} violation(s)"]
        lines.extend(f"  - {violation}" for violation in self.violations[:_REPORT_LIMIT])
        if len(self.violations) > _REPORT_LIMIT:
            lines.append(f"  ... {len(self.violations) - _REPORT_LIMIT} more")
        return "\n".join(lines)


def _task_name(key: tuple[str, str]) -> str:
    return f"{key[0]}/{key[1]}"


def _collect_intervals(records: list[CompletionRecord],
                       report: ValidationReport) -> dict[tuple[int, int], list[_Interval]]:
    intervals = defaultdict(list)
    for record in records:
        if record.stage1_server is not None:
            intervals[(1, record.stage1_server)].append(
                _Interval(record.stage1_start, record.stage1_end, record.stage1_enqueue, record.key))
        if record.migrated:
            if record.stage2_server is None or record.stage2_start is None:
                report.add(f"migrated task {_task_name(record.key)} has no stage-2 service")
                continue
            intervals[(2, record.stage2_server)].append(
                _Interval(record.stage2_start, record.completion, record.stage2_enqueue, record.key))
    return intervals


def _check_server(server_key: tuple[int, int], intervals: list[_Interval], report: ValidationReport) -> None:
    intervals.sort()
    previous_end = None
    previous_enqueue = None
    for interval in intervals:
        name = _task_name(interval.key)
        if interval.start < interval.enqueue:
            report.add(f"service before enqueue: {name} on server {server_key}")
        if previous_end is not None and interval.start < previous_end:
            report.add(f"overlapping service: {name} on server {server_key} starts at {interval.start} "
                       f"before previous end {previous_end}")
        if previous_enqueue is not None and interval.enqueue < previous_enqueue:
            report.add(f"FCFS order violated: {name} on server {server_key}")
        if interval.start > interval.enqueue and interval.start != previous_end:
            # 等待过的任务必须紧接着前一个任务开始
            report.add(f"idle with queue: server {server_key} idle while {name} waited")
        previous_end = interval.end
        previous_enqueue = interval.enqueue


def validate_run(records: Iterable[CompletionRecord],
                 workload: Workload,
                 server_states: Iterable[ServerState] | None = None) -> ValidationReport:
    """校验一次运行

    Args:
        records: 运行产生的完成记录
        workload: 本次运行的负载
        server_states: 运行结束时的服务器状态, 提供时额外检查工作量守恒
    Returns:
        ValidationReport: 违规列表, 每条带有出错的任务或服务器
    """
    records = list(records)
    report = ValidationReport()

    counts = Counter(record.key for record in records)
    for key, count in counts.items():
        if count > 1:
            report.add(f"duplicate completion: {_task_name(key)} x{count}")
    expected = {task.key for task in workload}
    for key in expected.difference(counts):
        report.add(f"missing completion: {_task_name(key)}")
    for key in set(counts).difference(expected):
        report.add(f"unknown task: {_task_name(key)}")

    for record in records:
        if record.completion <= record.arrival:
            report.add(f"completion not after arrival: {_task_name(record.key)}")

    intervals = _collect_intervals(records, report)
    for server_key in sorted(intervals):
        _check_server(server_key, intervals[server_key], report)

    if server_states is not None:
        for server in server_states:
            served = sum(interval.end - interval.start for interval in intervals.get(server.key, ()))
            if served != server.busy_ns:
                report.add(f"work conservation: server {server.key} busy_ns={server.busy_ns} "
                           f"but records sum to {served}")

    if report.is_clean:
        logger.debug("运行校验通过: {} 条记录", len(records))
    else:
        logger.warning("运行校验发现 {} 项违规", len(report.violations))
    return report
