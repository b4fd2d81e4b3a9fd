#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT


# =============================================================================
# IMPORTS
# =============================================================================

import json

import pytest

from numpy.testing import assert_, assert_equal

from csmpy import cache


# =============================================================================
# TESTS
# =============================================================================

@pytest.fixture
def store(tmp_path):
    return cache.ResultCache(tmp_path / "results")


def test_key_hash_is_stable():
    assert_equal(cache.key_hash({"b": 1, "a": [2, 0]}),
                 cache.key_hash({"a": [2, 0], "b": 1}))
    assert_(cache.key_hash([1]) != cache.key_hash([2]))


def test_put_get(store):
    key = [[2, 0], "symbolic", False]
    assert_(store.get("spectrum", key) is None)
    store.put("spectrum", key, {"energies": ["4+2A", "2"]})
    assert_equal(store.get("spectrum", key), {"energies": ["4+2A", "2"]})
    assert_(store.get("jack", key) is None)


def test_stale_schema(store):
    key = ["x"]
    store.put("jack", key, {"value": 1})
    path = store.path("jack", key)
    with open(path, encoding="utf-8") as fp:
        record = json.load(fp)
    record["schema"] = cache.SCHEMA_VERSION + 1
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(record, fp)
    assert_(store.get("jack", key) is None)


def test_corrupt_file(store):
    key = ["y"]
    store.put("jack", key, {"value": 1})
    with open(store.path("jack", key), "w", encoding="utf-8") as fp:
        fp.write("{not json")
    assert_(store.get("jack", key) is None)


@pytest.mark.parametrize("content", ["[]", "3", "null", "\"text\""])
def test_non_object_file(store, content):
    key = ["w"]
    store.put("jack", key, {"value": 1})
    with open(store.path("jack", key), "w", encoding="utf-8") as fp:
        fp.write(content)
    assert_(store.get("jack", key) is None)
    assert_equal(store.fetch("jack", key, lambda: {"value": 2}), {"value": 2})


def test_fetch_computes_once(store):
    calls = []

    def compute():
        calls.append(1)
        return {"value": len(calls)}

    first = store.fetch("family", ["z"], compute)
    second = store.fetch("family", ["z"], compute)
    assert_equal(first, {"value": 1})
    assert_equal(second, first)
    assert_equal(len(calls), 1)


def test_from_env(monkeypatch, tmp_path):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    assert_(cache.ResultCache.from_env() is None)
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert_equal(cache.ResultCache.from_env().directory, str(tmp_path))
    explicit = cache.ResultCache.from_env(str(tmp_path / "other"))
    assert_equal(explicit.directory, str(tmp_path / "other"))
