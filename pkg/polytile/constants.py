#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#


class ConfigSections:
    """
    This class stores values for:

    - `SEARCH`
    - `GEOMETRY`
    - `VALIDATE`
    - `RENDER`
    """

    SEARCH = "search"
    GEOMETRY = "geometry"
    VALIDATE = "validate"
    RENDER = "render"


class Directions:
    """
    This class stores values for:

    - `RIGHT`, `UP`, `LEFT`, `DOWN`: step letters of boundary words
    - `VECTORS`: unit displacement of each letter (y grows upwards)
    - `CCW`: letters in counter-clockwise order, used for quarter turns
    """

    RIGHT = "r"
    UP = "u"
    LEFT = "l"
    DOWN = "d"

    VECTORS = {"r": (1, 0), "u": (0, 1), "l": (-1, 0), "d": (0, -1)}
    CCW = ("r", "u", "l", "d")


class Labels:
    """
    This class stores values for:

    - the seventeen label names, in catalog order
    - `SHORT`: labels of the rod ends
    - `INFORMATION`: labels carrying one bit of a colour
    - `READERS`: labels that absorb an information label without reading it
    """

    ZERO = "0"
    ONE = "1"
    N = "N"
    M = "M"
    M_A = "M_A"
    X_01 = "X_01"
    Y = "Y"
    x_A = "x_A"
    y_A = "y_A"
    I_0N = "I_0N"
    I_1N = "I_1N"
    J_0N = "J_0N"
    J_1N = "J_1N"
    L = "L"
    L_A = "L_A"
    X_PRIME = "X'"
    Y_PRIME = "Y'"

    ORDER = (
        ZERO,
        ONE,
        N,
        M,
        M_A,
        X_01,
        Y,
        x_A,
        y_A,
        I_0N,
        I_1N,
        J_0N,
        J_1N,
        L,
        L_A,
        X_PRIME,
        Y_PRIME,
    )
    SHORT = (ZERO, ONE, N)
    INFORMATION = (I_0N, I_1N, J_0N, J_1N)
    READERS = (N, x_A, y_A)


class PieceNames:
    """
    This class stores values for:

    - `TOOTH`, `ROD`, `ROD90`, `ROD180`, `BLADE`
    - `ROD_ORIENTATIONS`: piece name of the rod in each translation-mode turn
    """

    TOOTH = "tooth"
    ROD = "rod"
    ROD90 = "rod90"
    ROD180 = "rod180"
    ROD270 = "rod270"
    BLADE = "blade"

    ROD_ORIENTATIONS = {0: ROD, 1: ROD90, 2: ROD180, 3: ROD270}


class Roles:
    """
    This class stores values for:

    - `BLADE`, `MEAT`, `FILLER`, `WIRE`, `TOOTH`
    """

    BLADE = "blade"
    MEAT = "meat"
    FILLER = "filler"
    WIRE = "wire"
    TOOTH = "tooth"


class ExitCodes:
    """
    This class stores values for:

    - `SUCCESS`: the command did what was asked
    - `USAGE`: bad flags or unreadable input files
    - `FAILURE`: semantic failure, defects or no tiling
    - `BUDGET`: search budget exhausted before a verdict
    """

    SUCCESS = 0
    USAGE = 1
    FAILURE = 2
    BUDGET = 3


# Scale at which the seventeen catalog labels fit on one edge.
CATALOG_SCALE = 207
CATALOG_KEY_LENGTH = 17
