#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Polyomino encodings of Wang tile sets, with search and verification tools."""

__version__ = "0.1.0"
