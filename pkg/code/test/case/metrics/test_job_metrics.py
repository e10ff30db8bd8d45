#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  test_job_metrics.py

@Time    :  2025-08-15 10:24:36

@Desc    :  作业级指标 (响应时间, 减速比) 测试类
"""
import tempfile
import unittest
from pathlib import Path

import numpy as np
import pandas as pd

from architecture.system_config import SystemConfig
from engine.completion_record import CompletionRecord
from engine.simulator import ClusterSimulator, run
from metrics.job_metrics import JOB_COLUMNS, aggregate, job_records, job_table, utilization, write_frame
from utils.sim_error import ExperimentIOError, ValidationFailure
from workload.synthetic import ArrivalSpec, SizeSpec, SyntheticSpec, generate_synthetic
from workload.task import Task, Workload

SECOND = 1_000_000_000


def record(job_id: str, task_id: str, arrival_s: float, completion_s: float) -> CompletionRecord:
    arrival, completion = int(arrival_s * SECOND), int(completion_s * SECOND)
    return CompletionRecord(job_id=job_id, task_id=task_id, arrival=arrival, stage1_server=0, stage2_server=None,
                            migrated=False, completion=completion, total_service_s=completion_s - arrival_s,
                            stage1_enqueue=arrival, stage1_start=arrival, stage1_end=completion)


class TestJobMetrics(unittest.TestCase):
    def setUp(self):
        self.workload = Workload([Task("j1", "t1", 0.0, 1.0), Task("j1", "t2", 4.0, 2.0), Task("j1", "t3", 2.0, 3.0),
                                  Task("j2", "t1", 5.0, 1.0)])
        self.records = [record("j1", "t1", 0.0, 1.0), record("j1", "t2", 4.0, 6.0), record("j1", "t3", 2.0, 3.0),
                        record("j2", "t1", 5.0, 7.0)]

    def test_job_response_and_slowdown(self):
        jobs = {job.job_id: job for job in job_records(self.records, self.workload, 1.0)}
        self.assertEqual(6.0, jobs["j1"].response)
        self.assertEqual(3.0, jobs["j1"].max_task_service)
        self.assertEqual(2.0, jobs["j1"].slowdown)
        self.assertEqual(2.0, jobs["j2"].response)

    def test_aggregate(self):
        summary = aggregate(self.records, self.workload, 1.0)
        self.assertEqual((2, 4), (summary.job_count, summary.task_count))
        self.assertEqual(4.0, summary.mrt)
        self.assertEqual(2.0, summary.mjs)
        self.assertEqual(4.0, summary.p50_r)
        self.assertEqual({"mrt", "mjs", "job_count", "task_count", "p50_r", "p90_r", "p99_r",
                          "p50_s", "p90_s", "p99_s"}, set(summary.to_mapping()))

    def test_faster_servers_shrink_denominator(self):
        summary = aggregate(self.records, self.workload, 2.0)
        self.assertEqual(4.0, summary.mjs)

    def test_missing_record(self):
        with self.assertRaises(ValidationFailure):
            aggregate(self.records[:-1], self.workload, 1.0)

    def test_slowdown_below_one(self):
        # μ=0.25 时 j2 的服务时间 4s 大于其响应时间 2s
        with self.assertRaises(ValidationFailure):
            aggregate(self.records, self.workload, 0.25)
        with self.assertRaises(ValidationFailure):
            aggregate(self.records, self.workload, 0.25, stage2_speed=0.25)
        summary = aggregate(self.records, self.workload, 0.25, stage2_speed=0.5)
        self.assertEqual(0.5, summary.mjs)

    def test_record_order_does_not_matter(self):
        workload = generate_synthetic(SyntheticSpec.default_heavy_tailed(total_tasks=2_000, seed=9))
        records = run(workload, SystemConfig(shape="two_stage", n_total=6, speed=4.0, theta=2.0))
        shuffled = [records[index] for index in np.random.default_rng(9).permutation(len(records))]
        self.assertEqual(aggregate(records, workload, 4.0), aggregate(shuffled, workload, 4.0))
        self.assertEqual(aggregate(records, workload, 4.0), aggregate(reversed(records), workload, 4.0))

    def test_job_table(self):
        table = job_table(self.records, self.workload, 1.0)
        self.assertEqual(list(JOB_COLUMNS), list(table.columns))
        self.assertEqual(["j1", "j2"], table["job_id"].tolist())
        self.assertEqual([6.0, 2.0], table["response_s"].tolist())

    def test_uncontended_slowdown_is_one(self):
        spec = SyntheticSpec(ArrivalSpec.deterministic(10.0), SizeSpec.bounded_pareto(1.5, 0.1, 5.0),
                             total_tasks=200, seed=3)
        workload = generate_synthetic(spec)
        slow = aggregate(run(workload, SystemConfig(shape="single_stage", n_total=1, speed=1.0)), workload, 1.0)
        fast = aggregate(run(workload, SystemConfig(shape="single_stage", n_total=1, speed=2.0)), workload, 2.0)
        self.assertEqual(1.0, slow.mjs)
        self.assertEqual(1.0, fast.mjs)
        self.assertAlmostEqual(slow.mrt / 2.0, fast.mrt, delta=1e-8)

    def test_utilization(self):
        workload = Workload([Task("a", "t", 0.0, 1.0), Task("b", "t", 0.0, 3.0)])
        simulator = ClusterSimulator(workload, SystemConfig(shape="single_stage", n_total=2, speed=1.0))
        simulator.run()
        frame = utilization(simulator.server_states, simulator.final_time)
        self.assertEqual(["stage", "server", "busy_s", "served", "utilization"], list(frame.columns))
        self.assertEqual([1.0, 3.0], frame["busy_s"].tolist())
        self.assertAlmostEqual(1.0 / 3.0, frame["utilization"].iloc[0])

    def test_write_frame_failure(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            blocker = Path(temp_dir) / "blocker"
            blocker.write_text("", encoding="utf-8")
            with self.assertRaises(ExperimentIOError):
                write_frame(pd.DataFrame({"a": [1]}), blocker / "out.csv")
