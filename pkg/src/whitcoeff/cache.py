"""JSON result cache for coset tables.

Tables are keyed by the content hash of (group, levi, subset, strategy)
and stored as plain JSON so a cached E7/E8 enumeration can be inspected
and replayed.  Writes are atomic (temp file + rename).
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from typing import Optional

from .rootsys import RootSystem
from .weyl import CosetTable

ENV_VAR = "WHITCOEFF_CACHE_DIR"
SCHEMA_VERSION = 1


def cache_dir(override: Optional[str] = None) -> str:
    if override:
        return override
    env = os.environ.get(ENV_VAR)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "whitcoeff")


def table_key(rs: RootSystem, levi, subset, strategy: str) -> str:
    payload = json.dumps(
        {
            "schema_version": SCHEMA_VERSION,
            "group": rs.name,
            "levi": sorted(levi) if levi else None,
            "subset": sorted(subset),
            "strategy": strategy,
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:24]


def _path(directory: str, key: str) -> str:
    return os.path.join(directory, f"coset-{key}.json")


def load_table(rs: RootSystem, levi, subset, strategy: str, directory: Optional[str] = None) -> Optional[CosetTable]:
    directory = cache_dir(directory)
    path = _path(directory, table_key(rs, levi, subset, strategy))
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    if data.get("schema_version") != SCHEMA_VERSION:
        return None
    return CosetTable.from_json(rs, data["table"])


def store_table(table: CosetTable, directory: Optional[str] = None) -> str:
    directory = cache_dir(directory)
    os.makedirs(directory, exist_ok=True)
    levi = None
    if table.strategy == "levi_pruned":
        levi = [i for i in table.rs.nodes() if i != table.levi_excluded_node]
    path = _path(directory, table_key(table.rs, levi, table.subset, table.strategy))
    payload = {"schema_version": SCHEMA_VERSION, "table": table.to_json()}
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path
