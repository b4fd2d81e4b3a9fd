#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

# =============================================================================
# DOCS
# =============================================================================

"""On-disk cache of command results.

One JSON file per (computation kind, key hash). Every file carries the
schema version; files written with another version are ignored and
overwritten.

"""

# =============================================================================
# IMPORTS
# =============================================================================

import hashlib
import json
import logging
import os
import tempfile

import attr


# =============================================================================
# CONSTANTS
# =============================================================================

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

ENV_VAR = "CSMPY_CACHE_DIR"


def canonical_json(value):
    """Stable JSON text used for keys."""
    return json.dumps(
        value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def key_hash(key):
    """sha256 of the canonical JSON of ``key``."""
    return hashlib.sha256(canonical_json(key).encode("utf-8")).hexdigest()


# =============================================================================
# CACHE
# =============================================================================

@attr.s(frozen=True)
class ResultCache:
    """Directory of cached results.

    Parameters
    ----------
    directory: str
        Created on first write.

    """

    directory = attr.ib(converter=os.fspath)

    @classmethod
    def from_env(cls, directory=None):
        """Cache in ``directory`` or ``$CSMPY_CACHE_DIR``; None if neither."""
        directory = directory or os.environ.get(ENV_VAR)
        return cls(directory) if directory else None

    def path(self, kind, key):
        """File holding ``(kind, key)``."""
        return os.path.join(
            self.directory, "{}-{}.json".format(kind, key_hash(key)))

    def get(self, kind, key):
        """The cached payload, or None on a miss or a stale schema."""
        path = self.path(kind, key)
        try:
            with open(path, encoding="utf-8") as fp:
                data = json.load(fp)
        except (OSError, ValueError):
            logger.debug("Cache miss %s %s", kind, key)
            return None
        if not isinstance(data, dict):
            logger.debug("Malformed cache entry %s", path)
            return None
        if data.get("schema") != SCHEMA_VERSION or data.get("key") != key:
            logger.debug("Stale cache entry %s", path)
            return None
        logger.debug("Cache hit %s %s", kind, key)
        return data["payload"]

    def put(self, kind, key, payload):
        """Write atomically: temporary file then rename."""
        os.makedirs(self.directory, exist_ok=True)
        record = {
            "schema": SCHEMA_VERSION, "kind": kind, "key": key,
            "payload": payload}
        fd, tmp = tempfile.mkstemp(
            dir=self.directory, prefix=".{}-".format(kind), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fp:
                json.dump(record, fp, sort_keys=True, ensure_ascii=False)
            os.replace(tmp, self.path(kind, key))
        except BaseException:
            if os.path.exists(tmp):
                os.remove(tmp)
            raise
        return payload

    def fetch(self, kind, key, compute):
        """Cached payload of ``(kind, key)``, computing it on a miss."""
        payload = self.get(kind, key)
        if payload is None:
            payload = self.put(kind, key, compute())
        return payload
