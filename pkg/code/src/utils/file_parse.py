#!/usr/bin/env python
# -*- encoding: utf-8 -*-

"""
@Author  :  lcn29

@Software:  PyCharm

@File    :  file_parse.py

@Time    :  2025-08-02 16:47:16

@Desc    :  文件解析工具, 负责实验配置 YAML 的读写
"""
from pathlib import Path
from typing import Any

import yaml
from loguru import logger

from utils.sim_error import ConfigurationError, ExperimentIOError


def parse_yaml_file(file_path: str | Path) -> dict[str, Any]:
    """ 解析 YAML 配置文件
    Args:
        file_path (str | Path): YAML 文件的路径
    Returns:
        dict: 解析后的配置, 空文件返回空字典
    Raises:
        ExperimentIOError: 文件不存在或无法读取
        ConfigurationError: YAML 语法错误, 或顶层不是映射
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as file:
            data = yaml.safe_load(file)
    except FileNotFoundError as e:
        logger.error("错误：文件 '{}' 未找到", file_path)
        raise ExperimentIOError(f"config file not found: {file_path}") from e
    except yaml.YAMLError as e:
        logger.error("YAML 解析错误：{}", e)
        raise ConfigurationError(f"invalid YAML in {file_path}: {e}") from e
    except OSError as e:
        logger.error("读取文件 '{}' 失败：{}", file_path, e)
        raise ExperimentIOError(f"cannot read {file_path}: {e}") from e

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"top level of {file_path} must be a mapping, got {type(data).__name__}")
    return data


def write_yaml_file(file_path: str | Path, data: dict | list) -> None:
    """ 将数据写入 YAML 文件
    Args:
        file_path (str | Path): YAML 文件的路径
        data (dict or list): 要写入的数据
    Raises:
        ExperimentIOError: 写入失败
    """

    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)

    try:
        with open(path, 'w', encoding='utf-8') as file:
            yaml.safe_dump(data, file, allow_unicode=True, sort_keys=True)
    except OSError as e:
        logger.error("写入 YAML 文件失败：{}", e)
        raise ExperimentIOError(f"cannot write {path}: {e}") from e
