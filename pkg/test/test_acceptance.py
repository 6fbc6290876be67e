#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""Full scale reproductions driven by the shipped experiment configs.
Each takes minutes, so they only run with ``SBMLAB_SLOW_TESTS`` set.
"""

import math
import os

import attr
import pytest
from scipy.stats import spearmanr

from sbmlab_experiments.config.default import get_config
from sbmlab_experiments.experiments import (
    SweepConfig,
    run_moment_check,
    run_outlier_check,
    run_spectrum_experiment,
    run_sweep,
    run_transition_scan,
)
from sbmlab_experiments.utils.common import params_from_config

NUM_JOBS = os.cpu_count() or 1

pytestmark = [
    pytest.mark.slow,
    pytest.mark.skipif(
        "SBMLAB_SLOW_TESTS" not in os.environ,
        reason="full scale runs need SBMLAB_SLOW_TESTS",
    ),
]


def _config(path, *opts):
    return get_config(path, ["NUM_JOBS", NUM_JOBS] + list(opts))


def test_accuracy_curve_at_mean_degree_8():
    config = _config(
        "configs/experiments/fig2_sweep.yaml", "SWEEP.MEAN_DEGREES", []
    )
    table = run_sweep(SweepConfig.from_config(config))
    assert (table["status"] == "ok").all()

    threshold = math.sqrt(4.0 * 8.0)
    far = (table["delta"] - threshold).abs() > 1.5
    errors = (
        table.loc[far, "mean_accuracy"]
        - table.loc[far, "expected_accuracy_theory"]
    ).abs()
    assert (errors <= 0.03).all(), table[far]

    correlation, _ = spearmanr(table["delta"], table["mean_accuracy"])
    assert correlation > 0.9


def test_transition_location():
    config = _config("configs/experiments/transition.yaml")
    _, thresholds = run_transition_scan(config)
    assert thresholds["mean_degree"].tolist() == [8.0, 16.0]
    for _, row in thresholds.iterrows():
        assert row["threshold_empirical"] is not None
        assert row["relative_error"] <= 0.1


def test_outlier_eigenvalues():
    config = _config("configs/experiments/outliers.yaml")
    params, _ = params_from_config(config.MODEL_CONFIG)
    seeds = [config.MODEL_CONFIG.SEED + i for i in range(5)]
    _, summary = run_outlier_check(params, seeds, num_jobs=NUM_JOBS)
    assert summary["z1_theory"] == pytest.approx(10.0)
    assert summary["z1_relative_error"] < 0.02
    assert summary["z2_theory"] == pytest.approx(17.0)
    assert summary["z2_relative_error"] < 0.02


def test_semicircle_fit():
    config = _config("configs/experiments/spectrum.yaml")
    params, partition = params_from_config(config.MODEL_CONFIG)
    frame, summary = run_spectrum_experiment(
        params, config.MODEL_CONFIG.SEED, bins=60, partition=partition
    )
    assert len(frame) == 60
    assert summary["l1_distance"] < 0.08


def test_catalan_moments():
    config = _config("configs/experiments/moments.yaml")
    params, partition = params_from_config(config.MODEL_CONFIG)
    frame = run_moment_check(
        params,
        config.MODEL_CONFIG.SEED,
        m_max=3,
        n_probes=30,
        partition=partition,
    )
    errors = frame.set_index("m")["relative_error"]
    assert errors[1] < 0.1
    assert errors[2] < 0.1
    assert errors[3] < 0.15


def test_below_threshold():
    config = SweepConfig(
        n=10000,
        mean_degree=8.0,
        deltas=[0.0],
        seeds_per_point=20,
        num_jobs=NUM_JOBS,
    )
    row = run_sweep(config).iloc[0]
    assert row["mean_accuracy"] <= 0.55
    assert row["detected_fraction"] <= 0.1


def test_four_group_threshold():
    config = _config("configs/experiments/four_groups.yaml")
    sweep_config = attr.evolve(
        SweepConfig.from_config(config), deltas=[10.0, 32.0]
    )
    table = run_sweep(sweep_config).set_index("delta")
    # threshold at cin - cout = 16, so margins of -6 and +16
    assert table.loc[32.0, "mean_accuracy"] > 0.9
    assert table.loc[10.0, "mean_accuracy"] <= 0.35
