#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

r"""sbmlab Configuration
========================

sbmlab uses the [Yacs configuration system](https://github.com/rbgirshick/yacs)
with the paradigm of `your code + a YACS config for experiment E =
reproducible experiment E`. Every default lives in
:ref:`sbmlab.config.default` and can be overwritten from YAML or JSON files
and from the command line:
```
    config = get_config(
        config_paths="configs/experiments/spectrum.yaml",
        opts=["MODEL.CIN", 48.0, "MODEL.COUT", 16.0],
    )
```

## Config structure
- SEED, LOG_FILE, LOG_LEVEL
- MODEL: planted partition parameters (N, Q, CIN, COUT)
- SOLVER: eigensolver tolerances and size limits
- DETECT: null model and detection thresholds
- SPECTRUM: histogram settings
- MOMENTS: stochastic trace settings
"""

from sbmlab.config.default import Config, get_config

__all__ = ["Config", "get_config"]
