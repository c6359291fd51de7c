#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
