#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""Exact cover over a placement universe.

Algorithm X on a dense incidence matrix: at every node the uncovered cell with
the fewest still-available placements is branched on, ties going to the first
cell in row-major order. Placements are tried in universe order, so runs are
deterministic.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from polytile.engine.universe import PlacementUniverse, Tiling

logger = logging.getLogger(__name__)

FOUND = "found"
NONE = "none"
BUDGET = "budget"


@dataclass
class SearchResult:
    """Outcome of solve/enumerate; ``status`` is FOUND, NONE or BUDGET."""

    status: str
    tilings: List[Tiling] = field(default_factory=list)
    nodes: int = 0
    cap_exceeded: bool = False
    # the budget ran out; a FOUND enumeration may be incomplete
    exhausted: bool = False

    @property
    def tiling(self) -> Optional[Tiling]:
        return self.tilings[0] if self.tilings else None

    @property
    def count(self) -> int:
        return len(self.tilings)


class _OutOfBudget(Exception):
    pass


class _Enough(Exception):
    pass


class ExactCoverSearch:
    def __init__(
        self, universe: PlacementUniverse, limit: int, cap: int, stop_at_cap: bool = False
    ):
        self.universe = universe
        self.limit = limit
        self.cap = cap
        # stop at the cap instead of looking for one more to set cap_exceeded
        self.stop_at_cap = stop_at_cap
        self.nodes = 0
        self.solutions: List[List[int]] = []
        self.cap_exceeded = False
        matrix = universe.matrix
        self.matrix = matrix
        # conflicts[r] = rows sharing a cell with r, computed lazily
        self._conflicts = {}

    def conflicts(self, row: int) -> np.ndarray:
        if row not in self._conflicts:
            self._conflicts[row] = self.matrix[:, self.universe.row_cells[row]].any(axis=1)
        return self._conflicts[row]

    def run(self, covered=None, available=None, chosen=None):
        n_rows, n_cells = self.matrix.shape
        if covered is None:
            covered = np.zeros(n_cells, dtype=bool)
        if available is None:
            available = np.ones(n_rows, dtype=bool)
        try:
            self._search(covered, available, list(chosen or []))
        except _Enough:
            pass

    def branches(self, covered, available):
        """Rows to try at this node, or None when every cell is covered."""
        uncovered = np.flatnonzero(~covered)
        if len(uncovered) == 0:
            return None
        counts = self.matrix[np.ix_(available, uncovered)].sum(axis=0)
        best = int(np.argmin(counts))
        if counts[best] == 0:
            return []
        cell = uncovered[best]
        return np.flatnonzero(self.matrix[:, cell] & available).tolist()

    def _search(self, covered, available, chosen):
        self.nodes += 1
        if self.nodes > self.limit:
            raise _OutOfBudget()

        rows = self.branches(covered, available)
        if rows is None:
            if len(self.solutions) >= self.cap:
                self.cap_exceeded = True
                raise _Enough()
            self.solutions.append(list(chosen))
            if self.stop_at_cap and len(self.solutions) >= self.cap:
                raise _Enough()
            return

        for row in rows:
            next_covered = covered.copy()
            next_covered[self.universe.row_cells[row]] = True
            next_available = available & ~self.conflicts(row)
            chosen.append(row)
            self._search(next_covered, next_available, chosen)
            chosen.pop()

    def tilings(self) -> List[Tiling]:
        return [
            Tiling(
                self.universe.region,
                [self.universe.placements[r] for r in rows],
            )
            for rows in self.solutions
        ]


def _status(tilings, exhausted: bool) -> str:
    if tilings:
        return FOUND
    return BUDGET if exhausted else NONE


def _result(search: ExactCoverSearch, exhausted: bool) -> SearchResult:
    tilings = search.tilings()
    return SearchResult(
        _status(tilings, exhausted), tilings, search.nodes, search.cap_exceeded, exhausted
    )


def _run(universe, limit, cap, stop_at_cap=False) -> SearchResult:
    search = ExactCoverSearch(universe, limit, cap, stop_at_cap)
    try:
        search.run()
    except _OutOfBudget:
        logger.warning(f"Search stopped after {search.nodes} nodes (budget {limit})")
        return _result(search, exhausted=True)
    return _result(search, exhausted=False)


def _run_split(universe, limit, cap, threads, stop_at_cap=False) -> SearchResult:
    """Splits the root branches over worker threads; merges in branch order."""
    root = ExactCoverSearch(universe, limit, cap)
    n_rows, n_cells = universe.matrix.shape
    covered = np.zeros(n_cells, dtype=bool)
    available = np.ones(n_rows, dtype=bool)
    rows = root.branches(covered, available)
    if not rows:
        return _run(universe, limit, cap, stop_at_cap)

    def work(row):
        search = ExactCoverSearch(universe, limit, cap, stop_at_cap)
        search._conflicts = {}
        next_covered = covered.copy()
        next_covered[universe.row_cells[row]] = True
        try:
            search.run(next_covered, available & ~search.conflicts(row), [row])
        except _OutOfBudget:
            return search, True
        return search, False

    with ThreadPoolExecutor(max_workers=threads) as pool:
        outcomes = list(pool.map(work, rows))

    merged = SearchResult(NONE, nodes=1)
    for search, exhausted in outcomes:
        merged.nodes += search.nodes
        for tiling in search.tilings():
            if len(merged.tilings) >= cap:
                merged.cap_exceeded = True
                break
            merged.tilings.append(tiling)
        merged.cap_exceeded = merged.cap_exceeded or search.cap_exceeded
        merged.exhausted = merged.exhausted or exhausted
    merged.status = _status(merged.tilings, merged.exhausted)
    return merged


def solve(universe: PlacementUniverse, limit: int = 2_000_000, threads: int = 1) -> SearchResult:
    """One tiling, none, or budget exhaustion."""
    if threads > 1:
        result = _run_split(universe, limit, 1, threads, stop_at_cap=True)
        result.tilings = result.tilings[:1]
        result.cap_exceeded = False
    else:
        result = _run(universe, limit, 1, stop_at_cap=True)
        result.cap_exceeded = False
    logger.info(
        f"solve: {result.status} after {result.nodes} nodes "
        f"({len(universe)} placements, {universe.area} cells)"
    )
    return result


def enumerate_tilings(
    universe: PlacementUniverse, cap: int = 1000, limit: int = 2_000_000, threads: int = 1
) -> SearchResult:
    """Every tiling up to ``cap``; ``cap_exceeded`` marks that more exist."""
    if threads > 1:
        result = _run_split(universe, limit, cap, threads)
    else:
        result = _run(universe, limit, cap)
    logger.info(
        f"enumerate: {result.count} tilings{' (cap exceeded)' if result.cap_exceeded else ''}, "
        f"status {result.status}, {result.nodes} nodes"
    )
    return result


def brute_force_count(universe: PlacementUniverse) -> int:
    """Counts exact covers by trying every subset; for tiny universes only."""
    if len(universe) > 20:
        raise ValueError("brute force is limited to 20 placements")

    masks = [
        sum(1 << int(i) for i in universe.row_cells[r]) for r in range(len(universe))
    ]
    full = (1 << universe.area) - 1
    count = 0
    for size in range(len(masks) + 1):
        for subset in itertools.combinations(masks, size):
            union = 0
            total = 0
            for mask in subset:
                union |= mask
                total += bin(mask).count("1")
            if union == full and total == universe.area:
                count += 1
    return count
