#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  test_result_table.py

@Time    :  2025-08-17 10:16:40

@Desc    :  结果聚合, 固定预算检查, 最优阈值与排名测试类
"""
import math
import unittest

from architecture.system_config import SystemConfig
from experiments.result_table import (best_theta, check_fixed_budget, point_table, rank_configurations,
                                      runs_frame)
from experiments.run_point import RunPoint, RunResult
from metrics.job_metrics import MetricsSummary
from metrics.summary_export import SummaryRow
from utils.sim_error import ValidationFailure


def make_result(config: SystemConfig, seed: int, mrt: float, rho: float = 0.6) -> RunResult:
    point = RunPoint(config=config, rho=rho, seed=seed)
    summary = MetricsSummary(mrt=mrt, mjs=mrt * 2, job_count=5, task_count=10, p50_r=mrt, p90_r=mrt, p99_r=mrt,
                             p50_s=1.0, p90_s=1.0, p99_s=1.0)
    row = SummaryRow(run_id=point.run_id, shape=config.shape.tag, policy=config.policy_label, n=config.n_total,
                     mu=config.speed, rho=rho, theta_s=config.theta, summary=summary)
    return RunResult(point=point, config=config, row=row, runtime_s=0.0, workload_fingerprint="f")


def single(n: int, policy: str = "rr") -> SystemConfig:
    return SystemConfig(shape="single_stage", n_total=n, speed=12.0 / n, single_policy=policy)


def two_stage(n: int, theta: float) -> SystemConfig:
    return SystemConfig(shape="two_stage", n_total=n, speed=12.0 / n, theta=theta)


class TestResultTable(unittest.TestCase):
    def test_run_id(self):
        self.assertEqual("single_stage-jiq-n4-rho0.6-thetana-s3", RunPoint(single(4, "jiq"), 0.6, 3).run_id)
        self.assertEqual("two_stage-rr+rr-n6-rho0.75-theta2.5-s1", RunPoint(two_stage(6, 2.5), 0.75, 1).run_id)

    def test_point_table_single_seed(self):
        table = point_table(runs_frame([make_result(single(2), 1, 3.0), make_result(single(4), 1, 5.0)]))
        self.assertEqual([2, 4], table["n"].tolist())
        self.assertEqual([1, 1], table["seeds"].tolist())
        self.assertFalse(any(column.endswith("_std") for column in table.columns))

    def test_point_table_multiple_seeds(self):
        results = [make_result(single(2), seed, mrt) for seed, mrt in ((1, 3.0), (2, 5.0))]
        results.append(make_result(two_stage(2, 1.0), 1, 4.0))
        table = point_table(runs_frame(results))
        self.assertEqual(2, len(table))
        self.assertEqual([2, 1], table["seeds"].tolist())
        self.assertEqual(4.0, table["mrt_s"].iloc[0])
        self.assertAlmostEqual(math.sqrt(2.0), table["mrt_s_std"].iloc[0])
        self.assertTrue(math.isnan(table["mrt_s_std"].iloc[1]))
        self.assertTrue(math.isnan(table["theta_s"].iloc[0]))

    def test_fixed_budget(self):
        results = [make_result(config, 1, 1.0) for config in (single(2), single(5), two_stage(10, 1.0))]
        self.assertLess(check_fixed_budget(results), 1e-12)

    def test_fixed_budget_violation(self):
        broken = SystemConfig(shape="single_stage", n_total=3, speed=5.0)
        with self.assertRaises(ValidationFailure):
            check_fixed_budget([make_result(single(2), 1, 1.0), make_result(broken, 1, 1.0)])

    def test_budget_groups_by_rho(self):
        other_load = SystemConfig(shape="single_stage", n_total=2, speed=1.0)
        results = [make_result(single(2), 1, 1.0), make_result(other_load, 1, 1.0, rho=0.9)]
        self.assertEqual(0.0, check_fixed_budget(results))

    def test_best_theta(self):
        results = [make_result(two_stage(n, theta), 1, mrt)
                   for n, theta, mrt in ((2, 0.5, 9.0), (2, 5.0, 4.0), (4, 0.5, 2.0), (4, 5.0, 3.0))]
        results.append(make_result(single(2), 1, 1.0))
        best = best_theta(point_table(runs_frame(results)))
        self.assertEqual(["n", "theta_s", "mrt_s", "mjs"], list(best.columns))
        self.assertEqual([(2, 5.0), (4, 0.5)], list(zip(best["n"].tolist(), best["theta_s"].tolist())))

    def test_rank_configurations(self):
        results = [make_result(single(2), 1, 3.0), make_result(two_stage(2, 1.0), 1, 1.0),
                   make_result(single(4), 1, 2.0)]
        ranked = rank_configurations(point_table(runs_frame(results)))
        self.assertEqual([1, 2, 3], ranked["rank"].tolist())
        self.assertEqual(["two_stage", "single_stage", "single_stage"], ranked["shape"].tolist())
        self.assertEqual([1.0, 2.0, 3.0], ranked["mrt_s"].tolist())
