#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import json
import os
from typing import Any, Dict, List, Optional, Union

import yacs.config


# Default sbmlab config node
class Config(yacs.config.CfgNode):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs, new_allowed=True)


CN = Config

DEFAULT_CONFIG_DIR = "configs/"
CONFIG_FILE_SEPARATOR = ","
JSON_EXTENSIONS = {".json"}

# -----------------------------------------------------------------------------
# Config definition
# -----------------------------------------------------------------------------
_C = CN()
_C.SEED = 100
_C.LOG_FILE = ""
_C.LOG_LEVEL = "INFO"
# -----------------------------------------------------------------------------
# PLANTED PARTITION MODEL
# -----------------------------------------------------------------------------
_C.MODEL = CN()
_C.MODEL.N = 2000
_C.MODEL.Q = 2
_C.MODEL.CIN = 12.0
_C.MODEL.COUT = 4.0
# -----------------------------------------------------------------------------
# EIGENSOLVERS
# -----------------------------------------------------------------------------
_C.SOLVER = CN()
_C.SOLVER.TOL = 1e-8
# -1 selects 10 * sqrt(n) + 200
_C.SOLVER.MAX_ITER = -1
# -1 lets the solver pick the Krylov subspace size
_C.SOLVER.NCV = -1
_C.SOLVER.DENSE_LIMIT = 4096
# operators at most this large skip the Krylov solver
_C.SOLVER.DENSE_FALLBACK = 64
# -----------------------------------------------------------------------------
# COMMUNITY DETECTION
# -----------------------------------------------------------------------------
_C.DETECT = CN()
_C.DETECT.NULL_MODEL = "erdos_renyi"
_C.DETECT.SEPARATION_TOLERANCE = 0.05
_C.DETECT.KMEANS_RESTARTS = 10
_C.DETECT.KMEANS_RETRIES = 3
# -----------------------------------------------------------------------------
# SPECTRAL DENSITY
# -----------------------------------------------------------------------------
_C.SPECTRUM = CN()
_C.SPECTRUM.BINS = 60
_C.SPECTRUM.RANGE_SCALE = 1.2
# -----------------------------------------------------------------------------
# TRACE MOMENTS
# -----------------------------------------------------------------------------
_C.MOMENTS = CN()
_C.MOMENTS.M_MAX = 3
_C.MOMENTS.N_PROBES = 30


def align_numeric_types(values: Dict[str, Any], reference: Config) -> Dict:
    r"""Casts integers in :p:`values` to float wherever :p:`reference` holds a
    float, since yacs refuses to merge an ``int`` into a ``float`` key.
    """
    aligned = {}
    for key, value in values.items():
        target = reference.get(key) if isinstance(reference, dict) else None
        if isinstance(value, dict):
            aligned[key] = align_numeric_types(value, target or {})
        elif (
            isinstance(target, float)
            and isinstance(value, int)
            and not isinstance(value, bool)
        ):
            aligned[key] = float(value)
        elif (
            isinstance(target, list)
            and isinstance(value, list)
            and any(isinstance(x, float) for x in target)
        ):
            aligned[key] = [float(x) for x in value]
        else:
            aligned[key] = value
    return aligned


def merge_config_file(config: Config, config_path: str) -> None:
    r"""Merges a YAML or JSON file into :p:`config` in place. JSON files are
    read with :py:`json` since yacs only understands YAML and python files.
    """
    if os.path.splitext(config_path)[1].lower() in JSON_EXTENSIONS:
        with open(config_path) as f:
            values = align_numeric_types(json.load(f), config)
        config.merge_from_other_cfg(Config(values))
    else:
        config.merge_from_file(config_path)


def get_config(
    config_paths: Optional[Union[List[str], str]] = None,
    opts: Optional[list] = None,
) -> Config:
    r"""Create a unified config with default values overwritten by values from
    :p:`config_paths` and overwritten by options from :p:`opts`.

    :param config_paths: List of config paths or string that contains comma
        separated list of config paths.
    :param opts: Config options (keys, values) in a list (e.g., passed from
        command line into the config. For example,
        :py:`opts = ['MODEL.CIN', 16.0]`. Argument can be used for parameter
        sweeping or quick tests.
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
        config.merge_from_list(opts)

    config.freeze()
    return config
