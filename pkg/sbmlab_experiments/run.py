#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import argparse
from typing import List, Optional

import sbmlab_experiments.experiments  # noqa: F401
from sbmlab.config import Config
from sbmlab.core.logging import logger
from sbmlab_experiments.common.experiment_registry import (
    experiment_registry,
)
from sbmlab_experiments.config.default import get_config

# command line flag -> (config key, type)
FLAG_OPTIONS = {
    "n": ("MODEL_CONFIG.MODEL.N", int),
    "q": ("MODEL_CONFIG.MODEL.Q", int),
    "cin": ("MODEL_CONFIG.MODEL.CIN", float),
    "cout": ("MODEL_CONFIG.MODEL.COUT", float),
    "seed": ("MODEL_CONFIG.SEED", int),
    "out": ("OUTPUT_DIR", str),
    "jobs": ("NUM_JOBS", int),
    "edges": ("INPUT.EDGE_LIST", str),
    "truth": ("INPUT.PARTITION", str),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbm",
        description="Planted partition graphs, spectral detection and "
        "random matrix checks",
    )
    parser.add_argument(
        "command",
        choices=experiment_registry.experiment_names(),
        help="experiment to run",
    )
    parser.add_argument(
        "--config",
        type=str,
        default=None,
        help="path to config yaml or json (comma separated for several)",
    )
    for flag, (key, flag_type) in FLAG_OPTIONS.items():
        parser.add_argument(
            f"--{flag}",
            type=flag_type,
            default=None,
            help=f"overrides {key}",
        )
    parser.add_argument(
        "opts",
        default=None,
        nargs=argparse.REMAINDER,
        help="Modify config options from command line",
    )
    return parser


def flag_opts(args: argparse.Namespace) -> list:
    r"""Translates the shortcut flags into ``KEY value`` config options. The
    values keep their parsed types so yacs sees floats for float keys.
    """
    opts: list = ["EXPERIMENT_NAME", args.command]
    for flag, (key, _) in FLAG_OPTIONS.items():
        value = getattr(args, flag)
        if value is not None:
            opts.extend([key, value])
    return opts


def execute_exp(config: Config) -> None:
    r"""Runs the experiment named by ``EXPERIMENT_NAME``."""
    logger.configure(config.MODEL_CONFIG)

    experiment_init = experiment_registry.get_experiment(
        config.EXPERIMENT_NAME
    )
    assert (
        experiment_init is not None
    ), f"{config.EXPERIMENT_NAME} is not supported"
    experiment = experiment_init(config)
    experiment.run()


def run_exp(
    command: str, config_paths: Optional[str] = None, opts=None
) -> None:
    r"""Runs :p:`command` with config files and options.

    :param command: registered experiment name.
    :param config_paths: config file path(s).
    :param opts: list of additional config options.
    """
    config = get_config(
        config_paths, ["EXPERIMENT_NAME", command] + list(opts or [])
    )
    execute_exp(config)


def main(argv: Optional[List[str]] = None) -> None:
    args = build_parser().parse_args(argv)
    opts = flag_opts(args) + list(args.opts or [])
    config = get_config(args.config, opts)
    execute_exp(config)


if __name__ == "__main__":
    main()
