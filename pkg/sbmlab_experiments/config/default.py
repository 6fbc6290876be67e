#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from typing import List, Optional, Union

from sbmlab import get_config as get_model_config
from sbmlab.config import Config as CN
from sbmlab.config.default import align_numeric_types, merge_config_file

DEFAULT_CONFIG_DIR = "configs/"
CONFIG_FILE_SEPARATOR = ","
# -----------------------------------------------------------------------------
# EXPERIMENT CONFIG
# -----------------------------------------------------------------------------
_C = CN()
# model config can be a list of configs like "A.yaml,B.yaml"
_C.BASE_MODEL_CONFIG_PATH = ""
_C.MODEL_CONFIG = CN()  # model config will be stored as a config node
_C.CMD_TRAILING_OPTS = []  # store command line options as list of strings
_C.EXPERIMENT_NAME = "theory"
_C.OUTPUT_DIR = "data/results"
_C.NUM_JOBS = 1
# -----------------------------------------------------------------------------
# INPUT FILES
# -----------------------------------------------------------------------------
_C.INPUT = CN()
_C.INPUT.EDGE_LIST = ""
_C.INPUT.PARTITION = ""
# -----------------------------------------------------------------------------
# ACCURACY SWEEP
# -----------------------------------------------------------------------------
_C.SWEEP = CN()
_C.SWEEP.MEAN_DEGREE = 8.0
# one sweep per entry when set, MEAN_DEGREE is ignored
_C.SWEEP.MEAN_DEGREES = []
# cin - cout for every grid point
_C.SWEEP.DELTAS = []
_C.SWEEP.SEEDS_PER_POINT = 10
_C.SWEEP.SEED_STRIDE = 1000
# -----------------------------------------------------------------------------
# TRANSITION SCAN
# -----------------------------------------------------------------------------
_C.TRANSITION = CN()
_C.TRANSITION.MEAN_DEGREES = [8.0, 16.0]
_C.TRANSITION.DELTA_MIN = 1.0
_C.TRANSITION.DELTA_MAX = 12.0
_C.TRANSITION.DELTA_STEP = 0.25
_C.TRANSITION.SEEDS_PER_POINT = 10
_C.TRANSITION.DETECTION_FRACTION = 0.8
# -----------------------------------------------------------------------------
# OUTLIER EIGENVALUES
# -----------------------------------------------------------------------------
_C.OUTLIERS = CN()
_C.OUTLIERS.NUM_SEEDS = 5


def get_config(
    config_paths: Optional[Union[List[str], str]] = None,
    opts: Optional[list] = None,
) -> CN:
    r"""Create a unified config with default values overwritten by values from
    :ref:`config_paths` and overwritten by options from :ref:`opts`.

    The model config is rebuilt from ``BASE_MODEL_CONFIG_PATH`` and any
    ``MODEL_CONFIG`` entries of the experiment files are applied on top.

    Args:
        config_paths: List of config paths or string that contains comma
        separated list of config paths.
        opts: Config options (keys, values) in a list (e.g., passed from
        command line into the config. For example, ``opts =
        ['MODEL_CONFIG.MODEL.CIN', 16.0]``.
    """
    config = _C.clone()
    if config_paths:
        if isinstance(config_paths, str):
            if CONFIG_FILE_SEPARATOR in config_paths:
                config_paths = config_paths.split(CONFIG_FILE_SEPARATOR)
            else:
                config_paths = [config_paths]

        for config_path in config_paths:
            merge_config_file(config, config_path)

    if opts:
        for k, v in zip(opts[0::2], opts[1::2]):
            if k == "BASE_MODEL_CONFIG_PATH":
                config.BASE_MODEL_CONFIG_PATH = v

    model_config = get_model_config(config.BASE_MODEL_CONFIG_PATH or None)
    model_config.defrost()
    overrides = align_numeric_types(config.MODEL_CONFIG, model_config)
    model_config.merge_from_other_cfg(CN(overrides))
    config.MODEL_CONFIG = model_config
    if opts:
        config.CMD_TRAILING_OPTS = config.CMD_TRAILING_OPTS + opts
        config.merge_from_list(config.CMD_TRAILING_OPTS)

    config.freeze()
    return config
