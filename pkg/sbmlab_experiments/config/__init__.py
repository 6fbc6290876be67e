#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

from sbmlab_experiments.config.default import get_config

__all__ = ["get_config"]
