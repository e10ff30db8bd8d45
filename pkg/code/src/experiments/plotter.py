#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcx29

@Software:  PyCharm

@File    :  plotter.py

@Time    :  2025-08-17 11:02:36

@Desc    :  扫描结果的 SVG 折线图, 同样的数据生成完全相同的文件
"""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import pandas as pd
from loguru import logger

from utils.sim_error import ExperimentIOError

matplotlib.rcParams["svg.hashsalt"] = "dispatch-simulator"
matplotlib.rcParams["svg.fonttype"] = "none"


def plot_lines(table: pd.DataFrame,
               x: str,
               y: str,
               series: str,
               path: str | Path,
               title: str,
               x_label: str,
               y_label: str,
               log_x: bool = False) -> Path:
    """每个 series 取值画一条 y 随 x 变化的折线

    Args:
        table: 聚合后的结果表
        x: 横轴列
        y: 纵轴列
        series: 分组列, 每组一条线
        path: 输出 SVG 路径
        title: 标题
        x_label: 横轴标签
        y_label: 纵轴标签
        log_x: 横轴取对数
    Returns:
        Path: 输出文件
    """
    svg_path = Path(path)
    figure, axes = plt.subplots(figsize=(7, 4.5))
    try:
        for label, group in table.groupby(series, sort=True):
            ordered = group.sort_values(x)
            axes.plot(ordered[x], ordered[y], marker="o", label=f"{series}={label}")
        if log_x:
            axes.set_xscale("log")
        axes.set_xlabel(x_label)
        axes.set_ylabel(y_label)
        axes.set_title(title)
        axes.grid(True)
        axes.legend()
        svg_path.parent.mkdir(parents=True, exist_ok=True)
        figure.savefig(svg_path, format="svg", metadata={"Date": None})
    except OSError as e:
        logger.error("写出图 {} 失败: {}", svg_path, e)
        raise ExperimentIOError(f"cannot write plot {svg_path}: {e}") from e
    finally:
        plt.close(figure)
    logger.debug("写出图 {}", svg_path)
    return svg_path
