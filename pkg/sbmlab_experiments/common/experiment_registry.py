#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""ExperimentRegistry is extended from sbmlab.Registry to provide
registration for experiment runners, while keeping Registry in sbmlab core
intact.

Import the experiment registry object using

.. code:: py

    from sbmlab_experiments.common.experiment_registry import (
        experiment_registry
    )

Register an experiment with ``@experiment_registry.register_experiment``.
Every registered name is a subcommand of the ``sbm`` command line tool.
"""

from typing import List, Optional

from sbmlab.core.registry import Registry


class ExperimentRegistry(Registry):
    @classmethod
    def register_experiment(
        cls, to_register=None, *, name: Optional[str] = None
    ):
        r"""Register an experiment runner to registry with key 'name'.

        Args:
            name: Key with which the experiment will be registered.
                If None will use the name of the class.

        """
        from sbmlab_experiments.common.base_experiment import BaseExperiment

        return cls._register_impl(
            "experiment", to_register, name, assert_type=BaseExperiment
        )

    @classmethod
    def get_experiment(cls, name):
        return cls._get_impl("experiment", name)

    @classmethod
    def experiment_names(cls) -> List[str]:
        return sorted(cls.mapping["experiment"].keys())


experiment_registry = ExperimentRegistry()
