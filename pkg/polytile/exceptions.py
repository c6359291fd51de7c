#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#


class PolytileError(Exception):
    """Base class of every error raised by polytile."""


class WordSyntaxError(PolytileError):
    """Boundary word text could not be parsed."""

    def __init__(self, message, column=None):
        super().__init__(message if column is None else f"{message} (column {column})")
        self.column = column


class OpenWordError(PolytileError):
    """Boundary word does not return to its starting vertex."""


class SelfIntersectingWordError(PolytileError):
    """Boundary word visits a vertex twice."""


class DisconnectedPolyominoError(PolytileError):
    """Cell set is empty or not edge-connected."""


class LabelSpecError(PolytileError):
    """Key or lock specification is out of range."""


class ScaleError(PolytileError):
    """Scale factor too small or of the wrong parity for the labels."""


class GraphError(PolytileError):
    """Matching graph or key assignment is inconsistent."""


class CatalogMismatchError(PolytileError):
    """Label words do not decode to the expected key and lock sets."""


class TileSetError(PolytileError):
    """Wang tile set, colour or assignment is invalid."""


class PlacementError(PolytileError):
    """Placement does not fit its region or uses a forbidden orientation."""


class UnknownPieceError(PolytileError):
    """Placement references a piece that is not in the piece set."""


class StructureError(PolytileError):
    """Built structure failed verification."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class FormatError(PolytileError):
    """Input file does not follow its format."""

    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{where}{message}")
        self.path = path
        self.line = line


class BudgetExhausted(PolytileError):
    """Search node budget ran out before a verdict."""
