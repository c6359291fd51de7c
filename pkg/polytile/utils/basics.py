#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import os
from typing import Optional

from polytile.config import Config


def get_config(config_file: Optional[str] = None) -> Config:
    """
    :return: Config instance
    """
    config_file = (
        config_file
        if config_file is not None
        else os.getenv("POLYTILE_CONFIG_FILE", "config.ini")
    )
    if not os.path.exists(config_file):
        return Config()

    return Config(filename=config_file)
