#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  dispatch_simulator.py

@Time    :  2025-08-18 09:36:12

@Desc    :  命令行入口: simulate / sweep-load / sweep-servers / sweep-theta / compare / generate / validate
"""
import argparse
import sys

from loguru import logger

from experiments.experiment_kind import ExperimentKind
from experiments.experiment_spec import ExperimentSpec
from experiments.runner import cmd_generate, cmd_validate, run_experiment
from utils.file_parse import parse_yaml_file
from utils.sim_error import ExperimentIOError, SimulationError
from workload.synthetic import SyntheticSpec

EXIT_OK = 0

_KIND_BY_COMMAND = {
    "simulate": ExperimentKind.SINGLE_RUN,
    "sweep-load": ExperimentKind.SWEEP_LOAD,
    "sweep-servers": ExperimentKind.SWEEP_SERVERS,
    "sweep-theta": ExperimentKind.SWEEP_THETA,
    "compare": ExperimentKind.COMPARE,
    "generate": ExperimentKind.SINGLE_RUN,
    "validate": ExperimentKind.SINGLE_RUN,
}


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--trace", help="trace CSV: job_id,task_id,arrival_s,cpu_gncu_s")
    source.add_argument("--synthetic", metavar="SPECFILE", help="YAML file describing a synthetic workload")
    common.add_argument("--config", help="YAML experiment config, flags override it")
    common.add_argument("--policy", help="comma separated single-stage policies: rr,jiq,lwl")
    common.add_argument("--shape", help="single_stage | two_stage")
    common.add_argument("--n", type=int, help="number of servers N0")
    common.add_argument("--n-grid", help="comma separated server counts")
    common.add_argument("--rho0", type=float, help="target load for fixed-load experiments (default 0.6)")
    common.add_argument("--rho-grid", help="comma separated loads")
    common.add_argument("--theta-s", type=float, help="two-stage threshold in seconds")
    common.add_argument("--theta-grid", help="comma separated thresholds in seconds")
    common.add_argument("--n-stage1", type=int, help="stage-1 servers, default N/2")
    common.add_argument("--migration", help="resume | restart")
    common.add_argument("--stage1-policy", help="stage-1 dispatcher, default rr")
    common.add_argument("--stage2-policy", help="stage-2 dispatcher, default rr")
    common.add_argument("--jiq-fallback", help="random | round_robin")
    common.add_argument("--seeds", help="comma separated replication seeds (default 1,2,3)")
    common.add_argument("--out", help="output directory")
    common.add_argument("--time-scale", type=float, help="multiplier applied to trace arrival times")
    common.add_argument("--workers", type=int, help="parallel worker processes")
    common.add_argument("--no-plots", action="store_true", help="skip SVG output")
    common.add_argument("--log-level", default="INFO", type=str.upper,
                        choices=["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR"])
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dispatch_simulator",
                                     description="Trace-driven simulator of multi-server dispatching under a fixed "
                                                 "computational budget")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_arguments()
    for command, help_text in (("simulate", "run one configuration"),
                               ("sweep-load", "vary the load at a fixed number of servers"),
                               ("sweep-servers", "vary the number of servers at a fixed load"),
                               ("sweep-theta", "vary the two-stage threshold"),
                               ("compare", "rank single-stage and two-stage configurations"),
                               ("generate", "write a synthetic workload as a trace CSV"),
                               ("validate", "run one configuration and print the validation report")):
        subparsers.add_parser(command, parents=[common], help=help_text)
    return parser


def build_spec(args: argparse.Namespace) -> ExperimentSpec:
    """默认值 < 配置文件 < 命令行参数"""
    spec = ExperimentSpec.from_file(args.config) if args.config else ExperimentSpec()
    synthetic = SyntheticSpec.from_mapping(parse_yaml_file(args.synthetic)) if args.synthetic else None
    return spec.with_overrides(kind=_KIND_BY_COMMAND[args.command],
                               trace=args.trace,
                               synthetic=synthetic,
                               policies=args.policy,
                               shape=args.shape,
                               n=args.n,
                               n_grid=args.n_grid,
                               rho0=args.rho0,
                               rho_grid=args.rho_grid,
                               theta_s=args.theta_s,
                               theta_grid=args.theta_grid,
                               n_stage1=args.n_stage1,
                               migration=args.migration,
                               stage1_policy=args.stage1_policy,
                               stage2_policy=args.stage2_policy,
                               jiq_fallback=args.jiq_fallback,
                               seeds=args.seeds,
                               out=args.out,
                               time_scale=args.time_scale,
                               workers=args.workers,
                               plots=False if args.no_plots else None)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logger.remove()
    logger.add(sys.stderr, level=args.log_level)

    try:
        spec = build_spec(args)
        if args.command == "generate":
            cmd_generate(spec, args.log_level)
        elif args.command == "validate":
            cmd_validate(spec, args.log_level)
        else:
            run_experiment(spec, args.log_level)
    except SimulationError as e:
        logger.error("{}: {}", type(e).__name__, e)
        return e.exit_code
    except OSError as e:
        logger.error("I/O error: {}", e)
        return ExperimentIOError.exit_code
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
