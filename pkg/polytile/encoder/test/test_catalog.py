#
# Copyright 2021 Polytile Developers
# SPDX-License-Identifier: Apache-2.0
#
import pytest

from polytile.constants import CATALOG_KEY_LENGTH, CATALOG_SCALE, Labels
from polytile.encoder.catalog import (
    TABLE_SETS,
    TABLE_WORDS,
    audit_catalog,
    build_catalog,
    corrected_words,
    derive_catalog_sets,
    key_index,
    label_catalog,
    label_matches,
    label_tile,
    label_word,
)
from polytile.exceptions import CatalogMismatchError
from polytile.geometry.words import word_displacement
from polytile.labeling.keylock import min_scale


def test_catalog_scale():
    assert min_scale(CATALOG_KEY_LENGTH) == CATALOG_SCALE
    assert len(Labels.ORDER) == CATALOG_KEY_LENGTH


def test_corrected_catalog_passes_audit():
    assert audit_catalog(corrected_words()) == []
    catalog = label_catalog()
    assert list(catalog) == list(Labels.ORDER)
    for name, spec in catalog.items():
        assert spec.key_index == key_index(name)
        assert word_displacement(spec.word) == (CATALOG_SCALE, 0)


def test_published_words_fail_on_y_only():
    problems = audit_catalog(TABLE_WORDS)
    assert problems
    assert all(problem.startswith(f"{Labels.Y}:") for problem in problems)


def test_derived_sets_agree_with_table():
    derived = derive_catalog_sets()
    for name in Labels.ORDER:
        assert derived[name] == frozenset(TABLE_SETS[name])


def test_corrupted_word_rejected():
    words = corrected_words()
    # drop one lock cavity of I_0N
    words[Labels.I_0N] = words[Labels.I_0N].replace("u12 t u5 t", "u12 t u6", 1)
    problems = audit_catalog(words)
    assert any(problem.startswith(f"{Labels.I_0N}:") for problem in problems)
    with pytest.raises(CatalogMismatchError):
        build_catalog(words)


def test_missing_word_reported():
    words = corrected_words()
    del words[Labels.L]
    assert f"{Labels.L}: no word" in audit_catalog(words)


def test_label_matches():
    assert label_matches(Labels.Y, Labels.I_0N)
    assert label_matches(Labels.ZERO, Labels.I_0N)
    assert label_matches(Labels.ONE, Labels.I_1N)
    assert not label_matches(Labels.ZERO, Labels.ONE)
    assert not label_matches(Labels.ZERO, Labels.I_1N)
    for a in Labels.ORDER:
        for b in Labels.ORDER:
            assert label_matches(a, b) == label_matches(b, a)


def test_information_variants_share_partners():
    # a partner of either I variant that is not a reader takes both
    for other in Labels.ORDER:
        if other in (Labels.ZERO, Labels.ONE):
            continue
        assert label_matches(Labels.I_0N, other) == label_matches(Labels.I_1N, other)


def test_unknown_label():
    with pytest.raises(CatalogMismatchError):
        label_word("Z")
    with pytest.raises(CatalogMismatchError):
        key_index("Z")


def test_label_tile():
    tile = label_tile(Labels.M)
    assert tile.width == CATALOG_SCALE
    assert tile.area > 0
