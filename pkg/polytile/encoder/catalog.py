#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
"""The seventeen edge labels of the Wang-tile encoding.

Label words are kept exactly as published, one open edge of width 207 each,
lock first and key pointing up. The lock sets are also derived from the base
families and their variants, and the catalog is audited against both on
first use.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Mapping, Optional

from polytile.constants import CATALOG_KEY_LENGTH, CATALOG_SCALE, Labels
from polytile.exceptions import CatalogMismatchError
from polytile.geometry.polyomino import Polyomino, word_to_polyomino
from polytile.geometry.words import (
    BoundaryWord,
    concat,
    is_simple_open,
    parse_word,
    trace_path,
    word_displacement,
)
from polytile.labeling.keylock import decode_edge_word

logger = logging.getLogger(__name__)

_HEAD = "r100 d100 r"
_TAIL = "r d100 r100"

TABLE_WORDS = {
    Labels.ZERO: f"{_HEAD} u12 t u17 t u11 t u5 t u5 t u11 t u5 t u27 r5 u3 T u96 {_TAIL}",
    Labels.ONE: f"{_HEAD} u12 t u11 t u11 t u11 t u5 t u11 t u5 t u27 r5 u9 T u90 {_TAIL}",
    Labels.N: f"{_HEAD} u12 t u11 t u5 t u5 t u5 t u5 t u5 t u17 t u27 r5 u15 T u84 {_TAIL}",
    Labels.M: f"{_HEAD} u12 t u5 t u53 t u5 t u21 r5 u21 T u78 {_TAIL}",
    Labels.M_A: f"{_HEAD} u12 t u5 t u53 t u5 t u5 t u5 t u5 t u3 r5 u27 T u72 {_TAIL}",
    Labels.X_01: (
        f"{_HEAD} u6 t u5 t u5 t u5 t u5 t u5 t u5 t u47 t u5 t u3 r5 u33 T u66 {_TAIL}"
    ),
    Labels.Y: f"{_HEAD} t u11 t u5 t u17 t u5 t u51 r5 u39 T u60 {_TAIL}",
    Labels.x_A: (
        f"{_HEAD} u12 t u5 t u5 t u5 t u5 t u5 t u41 t u5 t u5 t u3 r5 u45 T u54 {_TAIL}"
    ),
    Labels.y_A: f"{_HEAD} u12 t u5 t u17 t u5 t u41 t u5 t u5 t u3 r5 u51 T u48 {_TAIL}",
    Labels.I_0N: (
        f"{_HEAD} u12 t u5 t u29 t u5 t u5 t u5 t u17 t u11 t u3 r5 u57 T u42 {_TAIL}"
    ),
    Labels.I_1N: (
        f"{_HEAD} u12 t u5 t u29 t u5 t u5 t u5 t u17 t u5 t u9 r5 u63 T u36 {_TAIL}"
    ),
    Labels.J_0N: f"{_HEAD} u12 t u5 t u35 t u11 t u17 t u11 t u3 r5 u69 T u30 {_TAIL}",
    Labels.J_1N: f"{_HEAD} u12 t u5 t u35 t u11 t u17 t u5 t u9 r5 u75 T u24 {_TAIL}",
    Labels.L: (
        f"{_HEAD} u24 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u21 r5 u81 T u18 {_TAIL}"
    ),
    Labels.L_A: (
        f"{_HEAD} u24 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u3"
        f" r5 u87 T u12 {_TAIL}"
    ),
    Labels.X_PRIME: f"{_HEAD} u66 t u33 r5 u93 T u6 {_TAIL}",
    Labels.Y_PRIME: f"{_HEAD} u60 t u39 r5 u99 T {_TAIL}",
}

# The published Y lock column is six squares short of the 100-square dent.
TABLE_ERRATA = {Labels.Y: ("t u51 r5", "t u57 r5")}

_Z, _O, _N = Labels.ZERO, Labels.ONE, Labels.N

TABLE_SETS = {
    Labels.ZERO: {
        Labels.M_A, Labels.X_01, Labels.x_A, Labels.y_A, Labels.I_0N, Labels.J_0N, Labels.L_A
    },
    Labels.ONE: {
        Labels.M_A, Labels.X_01, Labels.x_A, Labels.y_A, Labels.I_1N, Labels.J_1N, Labels.L_A
    },
    Labels.N: {
        Labels.M_A, Labels.x_A, Labels.y_A, Labels.I_0N, Labels.I_1N, Labels.J_0N,
        Labels.J_1N, Labels.L_A,
    },
    Labels.M: {Labels.M, Labels.M_A, Labels.L, Labels.L_A},
    Labels.M_A: {Labels.M, Labels.M_A, Labels.L, Labels.L_A, _Z, _O, _N},
    Labels.X_01: {
        Labels.I_0N, Labels.I_1N, Labels.J_0N, Labels.J_1N, Labels.L, Labels.L_A,
        Labels.X_PRIME, _Z, _O,
    },
    Labels.Y: {Labels.I_0N, Labels.I_1N, Labels.L, Labels.L_A, Labels.Y_PRIME},
    Labels.x_A: {
        Labels.I_0N, Labels.I_1N, Labels.J_0N, Labels.J_1N, Labels.L, Labels.L_A, _Z, _O, _N
    },
    Labels.y_A: {Labels.I_0N, Labels.I_1N, Labels.L, Labels.L_A, _Z, _O, _N},
    Labels.I_0N: {Labels.X_01, Labels.Y, Labels.x_A, Labels.y_A, Labels.L, Labels.L_A, _Z, _N},
    Labels.I_1N: {Labels.X_01, Labels.Y, Labels.x_A, Labels.y_A, Labels.L, Labels.L_A, _O, _N},
    Labels.J_0N: {Labels.X_01, Labels.x_A, Labels.L, Labels.L_A, _Z, _N},
    Labels.J_1N: {Labels.X_01, Labels.x_A, Labels.L, Labels.L_A, _O, _N},
    Labels.L: {
        Labels.M, Labels.M_A, Labels.X_01, Labels.Y, Labels.x_A, Labels.y_A, Labels.I_0N,
        Labels.I_1N, Labels.J_0N, Labels.J_1N,
    },
    Labels.L_A: {
        Labels.M, Labels.M_A, Labels.X_01, Labels.Y, Labels.x_A, Labels.y_A, Labels.I_0N,
        Labels.I_1N, Labels.J_0N, Labels.J_1N, _Z, _O, _N,
    },
    Labels.X_PRIME: {Labels.X_01},
    Labels.Y_PRIME: {Labels.Y},
}

# Base families and which base families they match.
BASE_MATCHES = {
    "M": {"M", "L"},
    "X": {"I", "J", "L", "X'"},
    "Y": {"I", "L", "Y'"},
    "x": {"I", "J", "L"},
    "y": {"I", "L"},
    "I": {"X", "Y", "x", "y", "L"},
    "J": {"X", "x", "L"},
    "L": {"M", "X", "Y", "x", "y", "I", "J"},
    "X'": {"X"},
    "Y'": {"Y"},
}

# Catalog labels of each base family, with the short labels each variant adds.
FAMILY_MEMBERS = {
    "M": {Labels.M: set(), Labels.M_A: {_Z, _O, _N}},
    "X": {Labels.X_01: {_Z, _O}},
    "Y": {Labels.Y: set()},
    "x": {Labels.x_A: {_Z, _O, _N}},
    "y": {Labels.y_A: {_Z, _O, _N}},
    "I": {Labels.I_0N: {_Z, _N}, Labels.I_1N: {_O, _N}},
    "J": {Labels.J_0N: {_Z, _N}, Labels.J_1N: {_O, _N}},
    "L": {Labels.L: set(), Labels.L_A: {_Z, _O, _N}},
    "X'": {Labels.X_PRIME: set()},
    "Y'": {Labels.Y_PRIME: set()},
}


def key_index(name: str) -> int:
    try:
        return Labels.ORDER.index(name) + 1
    except ValueError:
        raise CatalogMismatchError(f"unknown label {name!r}")


@dataclass(frozen=True)
class LabelSpec:
    name: str
    key_index: int
    lock_index_set: FrozenSet[int]
    word: BoundaryWord

    @property
    def lock_names(self) -> List[str]:
        return [Labels.ORDER[i - 1] for i in sorted(self.lock_index_set)]


def derive_catalog_sets() -> Dict[str, FrozenSet[str]]:
    """Lock sets from the base families plus the variant unions.

    The short labels 0, 1 and N match nothing of their own accord; their sets
    are whatever variants list them.
    """
    sets: Dict[str, set] = {}
    for family, members in FAMILY_MEMBERS.items():
        matched = set()
        for other in BASE_MATCHES[family]:
            matched.update(FAMILY_MEMBERS[other])
        for name, extra in members.items():
            sets[name] = matched | extra
    for short in Labels.SHORT:
        sets[short] = {name for name, members in sets.items() if short in members}
    return {name: frozenset(names) for name, names in sets.items()}


def corrected_words() -> Dict[str, str]:
    words = dict(TABLE_WORDS)
    for name, (wrong, right) in TABLE_ERRATA.items():
        if wrong not in words[name]:
            raise CatalogMismatchError(f"erratum for {name!r} does not apply")
        words[name] = words[name].replace(wrong, right)
    return words


def audit_catalog(words: Mapping[str, str]) -> List[str]:
    """Every inconsistency between the words, the published sets and the derived sets."""
    problems = []
    derived = derive_catalog_sets()
    for name in Labels.ORDER:
        if derived[name] != frozenset(TABLE_SETS[name]):
            problems.append(f"{name}: derived set {sorted(derived[name])} != table")
        text = words.get(name)
        if text is None:
            problems.append(f"{name}: no word")
            continue
        try:
            word = parse_word(text)
            displacement = word_displacement(word)
            if displacement != (CATALOG_SCALE, 0):
                problems.append(f"{name}: displacement {displacement}")
                continue
            if not is_simple_open(word):
                problems.append(f"{name}: word touches itself")
            key, locks = decode_edge_word(word, CATALOG_KEY_LENGTH)
        except Exception as e:
            problems.append(f"{name}: {e}")
            continue
        if key != key_index(name):
            problems.append(f"{name}: key decodes to {key}, expected {key_index(name)}")
        expected = frozenset(key_index(other) for other in TABLE_SETS[name])
        if locks != expected:
            problems.append(f"{name}: lock decodes to {sorted(locks)}, expected {sorted(expected)}")

    for a in Labels.ORDER:
        for b in Labels.ORDER:
            if (b in TABLE_SETS[a]) != (a in TABLE_SETS[b]):
                problems.append(f"{a}/{b}: matching is not symmetric")
    return problems


def build_catalog(words: Optional[Mapping[str, str]] = None) -> Dict[str, LabelSpec]:
    """Catalog from ``words`` (the corrected table by default); raises on any mismatch."""
    words = dict(words) if words is not None else corrected_words()
    problems = audit_catalog(words)
    if problems:
        for problem in problems:
            logger.error(f"Label catalog: {problem}")
        raise CatalogMismatchError(f"{len(problems)} label catalog problems: {problems[0]}")

    catalog = {
        name: LabelSpec(
            name,
            key_index(name),
            frozenset(key_index(other) for other in TABLE_SETS[name]),
            parse_word(words[name]),
        )
        for name in Labels.ORDER
    }
    logger.debug(f"Label catalog of {len(catalog)} labels audited")
    return catalog


@lru_cache(maxsize=1)
def label_catalog() -> Dict[str, LabelSpec]:
    return build_catalog()


def label_word(name: str) -> BoundaryWord:
    catalog = label_catalog()
    if name not in catalog:
        raise CatalogMismatchError(f"unknown label {name!r}")
    return catalog[name].word


def label_matches(a: str, b: str) -> bool:
    catalog = label_catalog()
    return (
        catalog[a].key_index in catalog[b].lock_index_set
        and catalog[b].key_index in catalog[a].lock_index_set
    )


def label_tile(name: str) -> Polyomino:
    """The label edge closed into a slab below it, so it can be stored and drawn as a piece."""
    word = label_word(name)
    depth = 1 - int(trace_path(word)[:, 1].min())
    closing = parse_word(f"d{depth} l{CATALOG_SCALE} u{depth}")
    return word_to_polyomino(concat([word, closing]))
