#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  simulator.py

@Time    :  2025-08-14 10:11:03

@Desc    :  离散事件仿真主循环, 每个任务产生一条完成记录
"""
import time

from loguru import logger

from architecture.stage_service import StagePath, stage1_serve, stage2_serve
from architecture.system_builder import Stage, SystemWiring, build_system
from architecture.system_config import SystemConfig
from engine.completion_record import CompletionRecord
from engine.event_calendar import Event, EventCalendar, EventKind
from engine.server import ServerState
from engine.sim_time import NS_PER_SECOND, SimTime, seconds_to_ns, service_ns
from utils.sim_error import SimulationError
from workload.task import Task, Workload


class _TaskRun:
    """任务在系统中的运行时状态, 完成后转为 CompletionRecord"""

    __slots__ = ("task", "arrival", "path", "stage1_server", "stage2_server", "stage1_enqueue",
                 "stage1_start", "stage1_end", "stage2_enqueue", "stage2_start")

    def __init__(self, task: Task, arrival: SimTime, path: StagePath):
        self.task = task
        self.arrival = arrival
        self.path = path
        self.stage1_server = None
        self.stage2_server = None
        self.stage1_enqueue = None
        self.stage1_start = None
        self.stage1_end = None
        self.stage2_enqueue = None
        self.stage2_start = None


class ClusterSimulator:
    """多服务器分派 / 调度仿真器

    单次运行严格单线程且确定: 相同 (workload, config, seed) 得到相同的记录序列
    """

    def __init__(self, workload: Workload, config: SystemConfig, seed: int = 0):
        if len(workload) == 0:
            raise SimulationError("cannot simulate an empty workload")
        self._workload = workload
        self._config = config
        self._seed = seed
        self._wiring: SystemWiring | None = None
        self._calendar: EventCalendar | None = None
        self._records: list[CompletionRecord] = []
        self._theta_ns = config.theta_ns

    @property
    def config(self) -> SystemConfig:
        return self._config

    @property
    def server_states(self) -> list[ServerState]:
        if self._wiring is None:
            raise SimulationError("run() has not been called")
        return self._wiring.servers

    @property
    def final_time(self) -> SimTime:
        return self._calendar.now if self._calendar is not None else 0

    def run(self) -> list[CompletionRecord]:
        """运行到系统排空
        Returns:
            list[CompletionRecord]: 按完成时刻排序的记录, 每个任务一条
        """
        self._wiring = build_system(self._config, self._seed)
        self._calendar = EventCalendar()
        self._records = []
        started = time.perf_counter()

        self.__schedule_arrival(0)
        calendar = self._calendar
        while calendar:
            event = calendar.pop()
            kind = event.kind
            if kind is EventKind.TASK_ARRIVAL:
                self.__on_task_arrival(event)
            elif kind is EventKind.MIGRATION_ARRIVAL:
                run = event.payload
                run.stage2_enqueue = event.time
                self.__dispatch(self._wiring.stage2, run, event.time, stage2_serve(run.path))
            else:
                self.__on_service_end(event)

        self.__check_drained()
        logger.debug("仿真结束: {} 个任务, {} 个事件, 仿真时长 {} s, 耗时 {:.3f} s",
                     len(self._records), calendar.processed, calendar.now / NS_PER_SECOND,
                     time.perf_counter() - started)
        return self._records

    def __schedule_arrival(self, index: int) -> None:
        # 到达事件按需投放, 日历里同时只有一个外部到达
        tasks = self._workload.tasks
        if index < len(tasks):
            self._calendar.schedule(seconds_to_ns(tasks[index].arrival), EventKind.TASK_ARRIVAL, index)

    def __stage_path(self, task: Task) -> StagePath:
        config = self._config
        if not config.is_two_stage:
            return StagePath(service_ns(task.cpu_demand, config.speed), False, 0)
        return stage1_serve(task, config.stage1_speed, self._theta_ns, config.migration_mode, config.stage2_speed)

    def __on_task_arrival(self, event: Event) -> None:
        index = event.payload
        task = self._workload.tasks[index]
        run = _TaskRun(task, event.time, self.__stage_path(task))
        run.stage1_enqueue = event.time
        self.__dispatch(self._wiring.stage1, run, event.time, run.path.stage1_ns)
        self.__schedule_arrival(index + 1)

    def __dispatch(self, stage: Stage, run: _TaskRun, now: SimTime, occupancy_ns: SimTime) -> None:
        dispatcher = stage.dispatcher
        server_id = dispatcher.select(now, occupancy_ns)
        dispatcher.on_dispatch(server_id, now, occupancy_ns)

        if stage.index == 1:
            run.stage1_server = server_id
        else:
            run.stage2_server = server_id

        server = stage.servers[server_id]
        if server.in_service is None:
            self.__start_service(server, run, now)
        else:
            server.queue.append(run)

    def __start_service(self, server: ServerState, run: _TaskRun, now: SimTime) -> None:
        server.in_service = run
        server.service_start = now
        if server.stage == 1:
            run.stage1_start = now
            kind = EventKind.STAGE_CUTOFF if run.path.migrated else EventKind.SERVICE_COMPLETION
            self._calendar.schedule(now + run.path.stage1_ns, kind, server)
        else:
            run.stage2_start = now
            self._calendar.schedule(now + stage2_serve(run.path), EventKind.SERVICE_COMPLETION, server)

    def __on_service_end(self, event: Event) -> None:
        server: ServerState = event.payload
        run: _TaskRun = server.in_service
        now = event.time
        server.busy_ns += now - server.service_start
        server.served_count += 1

        if server.stage == 1:
            run.stage1_end = now
            if event.kind is EventKind.STAGE_CUTOFF:
                # 迁移在同一时刻完成, 排在该时刻所有完成 / 截断事件之后处理
                self._calendar.schedule(now, EventKind.MIGRATION_ARRIVAL, run)
            else:
                self.__complete(run, now)
        else:
            self.__complete(run, now)

        if server.queue:
            self.__start_service(server, server.queue.popleft(), now)
        else:
            server.in_service = None
            self._wiring.stages[server.stage - 1].dispatcher.on_idle(server.id)

    def __complete(self, run: _TaskRun, now: SimTime) -> None:
        task = run.task
        path = run.path
        self._records.append(CompletionRecord(
            job_id=task.job_id,
            task_id=task.task_id,
            arrival=run.arrival,
            stage1_server=run.stage1_server,
            stage2_server=run.stage2_server,
            migrated=path.migrated,
            completion=now,
            total_service_s=(path.stage1_ns + path.stage2_ns) / NS_PER_SECOND,
            stage1_enqueue=run.stage1_enqueue,
            stage1_start=run.stage1_start,
            stage1_end=run.stage1_end,
            stage2_enqueue=run.stage2_enqueue,
            stage2_start=run.stage2_start,
        ))

    def __check_drained(self) -> None:
        for server in self._wiring.servers:
            if server.in_service is not None or server.queue:
                raise SimulationError(f"server {server.key} not drained at end of run")
        if len(self._records) != len(self._workload):
            raise SimulationError(f"{len(self._records)} completions for {len(self._workload)} tasks")


def run(workload: Workload, config: SystemConfig, seed: int = 0) -> list[CompletionRecord]:
    """运行一次仿真, 返回按完成时刻排序的完成记录"""
    return ClusterSimulator(workload, config, seed).run()
