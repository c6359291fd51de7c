#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#

import os
import pathlib

from polytile.config import NAME_NODE_LIMIT, Config, environ_names
from polytile.constants import CATALOG_SCALE


def test_config(monkeypatch):
    test_config = os.path.join(
        pathlib.Path(__file__).parent.parent.parent, "tests/resources/test-config.txt"
    )
    _config = Config(filename=test_config)

    assert _config.node_limit == 50000
    assert _config.enumerate_cap == 20
    assert _config.threads == 2
    assert _config.label_scale == 15
    assert _config.teeth_radius == 5
    assert _config.report_limit == 10
    assert _config.cell_pixels == 3

    monkeypatch.setenv(environ_names[NAME_NODE_LIMIT][0], "1234")
    _config = Config(test_config)
    assert _config.node_limit == 1234
    assert _config.threads == 2


def test_config_defaults(monkeypatch):
    for envname, *_ in environ_names.values():
        monkeypatch.delenv(envname, raising=False)
    config = Config()
    assert config.label_scale == CATALOG_SCALE
    assert config.enumerate_cap == 1000
    assert config.cell_pixels == 1


def test_config_text():
    config_text = """
        [search]
        threads = 0
        [render]
        cell_pixels = -4
    """
    config = Config(text=config_text)
    assert config.threads == 1
    assert config.cell_pixels == 1


def test_config_dict():
    config_dict = {
        "search": {"node_limit": "77"},
        "geometry": {"teeth_radius": "6"},
    }
    config = Config(options_dict=config_dict)
    assert config.node_limit == 77
    assert config.teeth_radius == 6
