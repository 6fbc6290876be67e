#!/usr/bin/env python3

# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import logging
import os
from typing import Optional

from sbmlab.config import Config

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class SbmLogger(logging.Logger):
    r"""Package logger. Messages go to a stream handler and, once
    :ref:`set_log_file` was called, to one log file as well.
    """

    def __init__(
        self,
        name: str,
        level: int,
        stream=None,
        format_str: str = LOG_FORMAT,
        dateformat: str = DATE_FORMAT,
    ):
        super().__init__(name, level)
        self._formatter = logging.Formatter(format_str, dateformat)
        handler = logging.StreamHandler(stream)
        handler.setFormatter(self._formatter)
        self.addHandler(handler)
        self._file_handler: Optional[logging.FileHandler] = None

    @property
    def log_file(self) -> Optional[str]:
        if self._file_handler is None:
            return None
        return self._file_handler.baseFilename

    def set_log_file(self, path: Optional[str]) -> None:
        r"""Appends records to :p:`path`, replacing the previous log file.
        An empty path only closes the current file.
        """
        if self._file_handler is not None:
            self.removeHandler(self._file_handler)
            self._file_handler.close()
            self._file_handler = None
        if not path:
            return
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        self._file_handler = logging.FileHandler(path)
        self._file_handler.setFormatter(self._formatter)
        self.addHandler(self._file_handler)

    def configure(self, config: Config) -> None:
        r"""Applies ``LOG_LEVEL`` and ``LOG_FILE`` of a core config."""
        self.setLevel(config.LOG_LEVEL)
        self.set_log_file(config.LOG_FILE)


logger = SbmLogger(
    name="sbmlab", level=os.environ.get("SBMLAB_LOG_LEVEL", "INFO")
)
