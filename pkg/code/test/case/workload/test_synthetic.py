#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  test_synthetic.py

@Time    :  2025-08-18 17:40:26

@Desc    :  合成负载生成测试类
"""
import unittest

from utils.sim_error import ConfigurationError
from workload.synthetic import ArrivalSpec, JobSizeSpec, SizeSpec, SyntheticSpec, generate_synthetic
from workload.workload_stats import compute_stats


class TestSyntheticSpec(unittest.TestCase):
    def test_validation(self):
        with self.assertRaises(ConfigurationError):
            ArrivalSpec.poisson(0.0)
        with self.assertRaises(ConfigurationError):
            SizeSpec.bounded_pareto(1.5, 10.0, 1.0)
        with self.assertRaises(ConfigurationError):
            SizeSpec.exponential(-1.0)
        with self.assertRaises(ConfigurationError):
            JobSizeSpec.fixed(0)
        with self.assertRaises(ConfigurationError):
            SyntheticSpec(ArrivalSpec.poisson(1.0), SizeSpec.deterministic(1.0), total_tasks=0)

    def test_mapping_round_trip(self):
        spec = SyntheticSpec.default_heavy_tailed(total_tasks=1000, seed=9)
        self.assertEqual(spec, SyntheticSpec.from_mapping(spec.to_mapping()))
        self.assertEqual(spec, SyntheticSpec.from_mapping({"synthetic": spec.to_mapping()}))

    def test_from_mapping_errors(self):
        with self.assertRaises(ConfigurationError):
            SyntheticSpec.from_mapping({"size": {"distribution": "exponential", "mean": 1.0}})
        with self.assertRaises(ConfigurationError):
            SyntheticSpec.from_mapping({"arrival": {"process": "bursty", "rate": 1.0},
                                        "size": {"distribution": "exponential", "mean": 1.0}})

    def test_bounded_pareto_mean(self):
        mean = SizeSpec.bounded_pareto(1.5, 1.0, 1.0e4).theoretical_mean()
        self.assertAlmostEqual(2.97, mean, places=2)


class TestGenerateSynthetic(unittest.TestCase):
    def test_fully_deterministic(self):
        spec = SyntheticSpec(ArrivalSpec.deterministic(1.0), SizeSpec.deterministic(0.5),
                             JobSizeSpec.fixed(1), total_tasks=3, seed=1)
        workload = generate_synthetic(spec)
        self.assertEqual([0.0, 1.0, 2.0], [task.arrival for task in workload])
        self.assertEqual([0.5, 0.5, 0.5], [task.cpu_demand for task in workload])
        self.assertEqual(["j0", "j1", "j2"], [task.job_id for task in workload])

    def test_fixed_grouping(self):
        spec = SyntheticSpec(ArrivalSpec.deterministic(1.0), SizeSpec.deterministic(1.0),
                             JobSizeSpec.fixed(3), total_tasks=7, seed=1)
        workload = generate_synthetic(spec)
        self.assertEqual(["j0"] * 3 + ["j1"] * 3 + ["j2"], [task.job_id for task in workload])
        self.assertEqual(["t0", "t1", "t2"], [task.task_id for task in workload][:3])

    def test_same_seed_same_workload(self):
        spec = SyntheticSpec.default_heavy_tailed(total_tasks=2000, seed=42)
        first = generate_synthetic(spec)
        second = generate_synthetic(spec)
        self.assertEqual(first, second)
        self.assertEqual(first.fingerprint(), second.fingerprint())
        self.assertNotEqual(first.fingerprint(), generate_synthetic(spec.with_seed(43)).fingerprint())

    def test_poisson_rate(self):
        spec = SyntheticSpec(ArrivalSpec.poisson(2.0), SizeSpec.exponential(1.0), total_tasks=100_000, seed=5)
        stats = compute_stats(generate_synthetic(spec))
        self.assertLess(abs(stats.lambda_rate - 2.0) / 2.0, 0.02)
        self.assertLess(abs(stats.mean_cpu_demand - 1.0), 0.02)

    def test_bounded_pareto_range(self):
        spec = SyntheticSpec(ArrivalSpec.poisson(1.0), SizeSpec.bounded_pareto(1.5, 1.0, 100.0), total_tasks=5000)
        demands = [task.cpu_demand for task in generate_synthetic(spec)]
        self.assertGreaterEqual(min(demands), 1.0)
        self.assertLess(max(demands), 100.0)

    def test_geometric_jobs(self):
        spec = SyntheticSpec.default_heavy_tailed(total_tasks=20_000, seed=3)
        stats = compute_stats(generate_synthetic(spec))
        self.assertEqual(20_000, stats.task_count)
        self.assertLess(abs(stats.task_count / stats.job_count - 5.0), 0.5)
