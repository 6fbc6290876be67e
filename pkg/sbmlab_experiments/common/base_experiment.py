#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import os
from typing import Any, ClassVar, Optional, Tuple

import pandas as pd

from sbmlab.config import Config
from sbmlab.core.logging import logger
from sbmlab.graphs.block_model import BlockParams, Partition
from sbmlab_experiments.utils.common import (
    params_from_config,
    write_json,
    write_table,
)


class BaseExperiment:
    r"""Generic experiment class that serves as a base template for every
    command of the ``sbm`` tool. Holds the merged config and writes result
    tables and reports into ``OUTPUT_DIR``.
    """

    # name of the main CSV table written by :ref:`save_table`
    table_name: ClassVar[str] = ""

    def __init__(self, config: Config) -> None:
        assert config is not None, "needs config file to initialize runner"
        self.config = config

    @property
    def model_config(self) -> Config:
        return self.config.MODEL_CONFIG

    @property
    def output_dir(self) -> str:
        return self.config.OUTPUT_DIR

    @property
    def seed(self) -> int:
        return self.model_config.SEED

    def planted_model(self) -> Tuple[BlockParams, Partition]:
        return params_from_config(self.model_config)

    def output_path(self, filename: str) -> str:
        os.makedirs(self.output_dir, exist_ok=True)
        return os.path.join(self.output_dir, filename)

    def save_table(
        self,
        frame: pd.DataFrame,
        filename: str,
        table_name: Optional[str] = None,
    ) -> str:
        path = self.output_path(filename)
        write_table(frame, path, table_name or self.table_name)
        logger.info("wrote {} rows to {}".format(len(frame), path))
        return path

    def save_report(self, report: Any, filename: str) -> str:
        path = self.output_path(filename)
        write_json(report, path)
        logger.info("wrote report to {}".format(path))
        return path

    def run(self) -> None:
        raise NotImplementedError
