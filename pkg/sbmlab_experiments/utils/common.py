#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import multiprocessing
import os
from typing import Any, Callable, List, Sequence, Tuple

import numpy as np
import pandas as pd
import tqdm

from sbmlab.config import Config
from sbmlab.core.utils import to_json
from sbmlab.graphs.block_model import (
    BlockParams,
    Partition,
    make_planted_partition,
)

CSV_FLOAT_FORMAT = "%.12g"
SCHEMA_VERSION = 1


def params_from_config(config: Config) -> Tuple[BlockParams, Partition]:
    r"""Planted partition and ground truth from a model config node."""
    return make_planted_partition(
        config.MODEL.N, config.MODEL.Q, config.MODEL.CIN, config.MODEL.COUT
    )


def derive_seed(
    seed_base: int, point_index: int, stride: int, replicate: int
) -> int:
    return int(seed_base) + int(point_index) * int(stride) + int(replicate)


def mean_and_stderr(values: Sequence[float]) -> Tuple[float, float]:
    r"""Sample mean and standard error of the mean. A single value has zero
    standard error; an empty sequence gives ``(nan, nan)``.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        return float("nan"), float("nan")
    if values.size == 1:
        return float(values[0]), 0.0
    return (
        float(values.mean()),
        float(values.std(ddof=1) / np.sqrt(values.size)),
    )


def _indexed_call(payload):
    fn, index, task = payload
    return index, fn(task)


def run_tasks(
    fn: Callable[[Any], Any],
    tasks: Sequence[Any],
    num_jobs: int = 1,
    desc: str = "",
) -> List[Any]:
    r"""Applies :p:`fn` to every task in a pool of :p:`num_jobs` processes and
    returns the results in task order, whatever order they finish in.
    :p:`fn` must be a module level function.
    """
    results: List[Any] = [None] * len(tasks)
    payloads = [(fn, i, task) for i, task in enumerate(tasks)]
    with tqdm.tqdm(total=len(tasks), desc=desc, leave=False) as pbar:
        if num_jobs <= 1 or len(tasks) <= 1:
            for payload in payloads:
                index, result = _indexed_call(payload)
                results[index] = result
                pbar.update()
        else:
            with multiprocessing.Pool(num_jobs) as pool:
                for index, result in pool.imap_unordered(
                    _indexed_call, payloads
                ):
                    results[index] = result
                    pbar.update()
    return results


def write_table(frame: pd.DataFrame, path: str, table_name: str) -> None:
    r"""Writes :p:`frame` as CSV behind a schema comment line. Floats use a
    fixed format so identical inputs give byte-identical files.
    """
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", newline="") as f:
        f.write(
            "# sbmlab {} schema v{}\n".format(table_name, SCHEMA_VERSION)
        )
        frame.to_csv(f, index=False, float_format=CSV_FLOAT_FORMAT)


def read_table(path: str) -> pd.DataFrame:
    return pd.read_csv(path, comment="#")


def write_json(obj: Any, path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as f:
        f.write(to_json(obj))
        f.write("\n")
