#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  test_dispatch_simulator.py

@Time    :  2025-08-18 16:33:05

@Desc    :  命令行入口测试类: 参数合并与退出码
"""
import tempfile
import unittest
from pathlib import Path

import pandas as pd

from dispatch_simulator import build_parser, build_spec, main
from experiments.experiment_kind import ExperimentKind
from policies.policy_type import PolicyType
from utils.file_parse import write_yaml_file

SYNTHETIC = {"arrival": {"process": "poisson", "rate": 2.0},
             "size": {"distribution": "exponential", "mean": 1.0},
             "tasks_per_job": {"kind": "geometric", "mean": 2.0},
             "total_tasks": 200,
             "seed": 1}


class TestDispatchSimulator(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.base = Path(self.temp_dir.name)
        self.synthetic = self.base / "synthetic.yaml"
        write_yaml_file(self.synthetic, SYNTHETIC)

    def tearDown(self):
        self.temp_dir.cleanup()

    def args(self, *argv: str) -> list[str]:
        return [*argv, "--synthetic", str(self.synthetic), "--log-level", "warning"]

    def test_flags_override_config(self):
        config = self.base / "experiment.yaml"
        write_yaml_file(config, {"n": 8, "rho0": 0.7, "policies": ["jiq"], "seeds": [4]})
        args = build_parser().parse_args(self.args("sweep-load", "--config", str(config), "--n", "16",
                                                   "--rho-grid", "0.5,0.9"))
        spec = build_spec(args)
        self.assertIs(ExperimentKind.SWEEP_LOAD, spec.kind)
        self.assertEqual((16, 0.7, (4,)), (spec.n, spec.rho0, spec.seeds))
        self.assertEqual((PolicyType.JIQ,), spec.policies)
        self.assertEqual((0.5, 0.9), spec.rho_grid)
        self.assertEqual(200, spec.synthetic.total_tasks)

    def test_simulate(self):
        out = self.base / "simulate"
        self.assertEqual(0, main(self.args("simulate", "--n", "3", "--policy", "lwl", "--out", str(out))))
        self.assertEqual(200, len(pd.read_csv(out / "records.csv")))
        self.assertTrue((out / "summary.csv").is_file())

    def test_sweep_servers(self):
        out = self.base / "servers"
        argv = self.args("sweep-servers", "--n-grid", "1,2", "--seeds", "1", "--no-plots", "--out", str(out))
        self.assertEqual(0, main(argv))
        self.assertEqual(2, len(pd.read_csv(out / "runs.csv")))
        self.assertFalse(list(out.glob("*.svg")))

    def test_generate_and_replay(self):
        out = self.base / "generated"
        self.assertEqual(0, main(self.args("generate", "--out", str(out))))
        trace = out / "workload.csv"
        self.assertTrue(trace.is_file())
        replay_out = self.base / "replay"
        self.assertEqual(0, main(["validate", "--trace", str(trace), "--n", "2", "--out", str(replay_out),
                                  "--log-level", "warning"]))

    def test_configuration_error_exit_code(self):
        self.assertEqual(2, main(self.args("simulate", "--policy", "sita", "--out", str(self.base / "bad"))))
        self.assertEqual(2, main(self.args("simulate", "--rho0", "1.5", "--out", str(self.base / "bad"))))
        self.assertEqual(2, main(self.args("sweep-theta", "--n-grid", "3", "--out", str(self.base / "bad"))))
        self.assertEqual(2, main(self.args("simulate", "--shape", "two_stage", "--n", "4", "--theta-s", "1e-10",
                                           "--out", str(self.base / "bad"))))

    def test_negative_seed_exit_code(self):
        trace = self.base / "trace.csv"
        trace.write_text("job_id,task_id,arrival_s,cpu_gncu_s\nj1,t1,0,1.0\nj2,t1,1,2.0\n", encoding="utf-8")
        self.assertEqual(2, main(["simulate", "--trace", str(trace), "--policy", "jiq", "--seeds=-1",
                                  "--out", str(self.base / "bad"), "--log-level", "warning"]))

    def test_zero_span_trace_exit_code(self):
        trace = self.base / "burst.csv"
        trace.write_text("job_id,task_id,arrival_s,cpu_gncu_s\nj1,t1,0,1.0\nj2,t1,0,2.0\n", encoding="utf-8")
        self.assertEqual(2, main(["simulate", "--trace", str(trace), "--out", str(self.base / "burst"),
                                  "--log-level", "warning"]))

    def test_missing_trace_exit_code(self):
        self.assertEqual(3, main(["simulate", "--trace", str(self.base / "absent.csv"), "--log-level", "warning"]))

    def test_unknown_command(self):
        with self.assertRaises(SystemExit):
            main(["sweep-everything"])
