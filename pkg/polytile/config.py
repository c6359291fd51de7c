#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Config data."""

import configparser
import logging
import os

from polytile.constants import CATALOG_SCALE, ConfigSections

NAME_NODE_LIMIT = "node_limit"
NAME_ENUMERATE_CAP = "enumerate_cap"
NAME_THREADS = "threads"
NAME_LABEL_SCALE = "label_scale"
NAME_TEETH_RADIUS = "teeth_radius"
NAME_REPORT_LIMIT = "report_limit"
NAME_CELL_PIXELS = "cell_pixels"

environ_names = {
    NAME_NODE_LIMIT: [
        "SEARCH_NODE_LIMIT",
        "Node budget of a single exact-cover search",
        ConfigSections.SEARCH,
    ],
    NAME_ENUMERATE_CAP: [
        "ENUMERATE_CAP",
        "Maximum number of tilings collected by an enumeration",
        ConfigSections.SEARCH,
    ],
    NAME_THREADS: [
        "POLYTILE_THREADS",
        "Worker threads for root-split searches",
        ConfigSections.SEARCH,
    ],
    NAME_LABEL_SCALE: [
        "LABEL_SCALE",
        "Default edge width, in cells, of a KL labelling",
        ConfigSections.GEOMETRY,
    ],
    NAME_TEETH_RADIUS: [
        "TEETH_RADIUS",
        "Radius, in tooth widths, of the teeth-only refutation window",
        ConfigSections.GEOMETRY,
    ],
    NAME_REPORT_LIMIT: [
        "REPORT_LIMIT",
        "Offending cells listed in a validator report",
        ConfigSections.VALIDATE,
    ],
    NAME_CELL_PIXELS: [
        "RENDER_CELL_PIXELS",
        "Pixel size of one cell in SVG renders",
        ConfigSections.RENDER,
    ],
}


class Config(configparser.ConfigParser):
    """Class to manage the polytile configuration."""

    def __init__(self, filename=None, options_dict=None, **kwargs):
        """
        Initialize Config class.

        Options available:

        [search]
        node_limit = 2000000                   # exact-cover node budget.
        enumerate_cap = 1000
        threads = 1

        [geometry]
        label_scale = 207
        teeth_radius = 4

        [validate]
        report_limit = 100

        [render]
        cell_pixels = 1

        :param filename: Path of the config file, str.
        :param options_dict: Python dict with the config, dict.
        :param kwargs: Additional args. If you pass text, you have to pass the plain text
        configuration.
        """
        configparser.ConfigParser.__init__(self)

        self._logger = logging.getLogger("config")
        for section in (
            ConfigSections.SEARCH,
            ConfigSections.GEOMETRY,
            ConfigSections.VALIDATE,
            ConfigSections.RENDER,
        ):
            self.add_section(section)

        if filename:
            self._logger.debug(f"Config: loading config file {filename}")
            with open(filename) as fp:
                text = fp.read()
                self.read_string(text)
        else:
            if "text" in kwargs:
                self.read_string(kwargs["text"])

        if options_dict:
            self._logger.debug(f"Config: loading from dict {options_dict}")
            self.read_dict(options_dict)

        self._load_environ()

    def _load_environ(self):
        for option_name, environ_item in environ_names.items():
            value = os.environ.get(environ_item[0])
            if value is not None:
                self._logger.debug(f"Config: setting environ {option_name} = {value}")
                self.set(environ_item[2], option_name, value)

    @property
    def node_limit(self):
        """Node budget of one search; a run that needs more reports BUDGET."""
        return self.getint(ConfigSections.SEARCH, NAME_NODE_LIMIT, fallback=2_000_000)

    @property
    def enumerate_cap(self):
        return self.getint(ConfigSections.SEARCH, NAME_ENUMERATE_CAP, fallback=1000)

    @property
    def threads(self):
        return max(1, self.getint(ConfigSections.SEARCH, NAME_THREADS, fallback=1))

    @property
    def label_scale(self):
        return self.getint(
            ConfigSections.GEOMETRY, NAME_LABEL_SCALE, fallback=CATALOG_SCALE
        )

    @property
    def teeth_radius(self):
        return self.getint(ConfigSections.GEOMETRY, NAME_TEETH_RADIUS, fallback=4)

    @property
    def report_limit(self):
        return self.getint(ConfigSections.VALIDATE, NAME_REPORT_LIMIT, fallback=100)

    @property
    def cell_pixels(self):
        return max(1, self.getint(ConfigSections.RENDER, NAME_CELL_PIXELS, fallback=1))
