"""On-disk layout.

    <out>/g<g>/<triple key>.jsonl   one RgEntry per line
    <out>/g<g>/manifest.json        triple keys, per-triple counts, total
    <out>/g<g>/C.jsonl              canonical members of C_g
    <out>/table.csv                 genus,R,C,L,M
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Sequence

from .engine import RgEntry
from .graphs import MultiGraph
from .maps import Hypermap
from .perm import Permutation
from .rules import TypeTriple

BASE_KEY = "base"


class MissingData(FileNotFoundError):
    def __init__(self, what: str, genus: int):
        super().__init__(f"missing {what} for genus {genus}")
        self.genus = genus


def genus_dir(out: Path, g: int) -> Path:
    return Path(out) / f"g{g}"


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def base_entry() -> RgEntry:
    """The circle: one vertex, one loop; its dual hypermap is the identity on one brin."""
    ident = Permutation.identity(1)
    return RgEntry(Hypermap(ident, ident, ident), 0, 0, BASE_KEY)


def write_shards(out: Path, g: int, per_triple: Sequence[tuple[TypeTriple | str, Sequence[RgEntry]]],
                 edges: Optional[int] = None) -> Path:
    d = genus_dir(out, g)
    d.mkdir(parents=True, exist_ok=True)
    listing = []
    for triple, entries in per_triple:
        key = triple if isinstance(triple, str) else triple.key
        with open(d / f"{key}.jsonl", "w") as fh:
            for e in entries:
                fh.write(_dump(e.to_json()) + "\n")
        listing.append({"key": key, "count": len(entries)})
    manifest = {"genus": g, "edges": edges, "triples": listing,
                "total": sum(t["count"] for t in listing)}
    path = d / "manifest.json"
    path.write_text(json.dumps(manifest, indent=1) + "\n")
    return path


def read_manifest(out: Path, g: int) -> dict:
    path = genus_dir(out, g) / "manifest.json"
    if not path.exists():
        raise MissingData("shards", g)
    return json.loads(path.read_text())


def read_entries(out: Path, g: int, complete: bool = True) -> list[RgEntry]:
    manifest = read_manifest(out, g)
    if complete and manifest.get("edges") is not None:
        raise MissingData("a full enumeration (found an --edges subset)", g)
    entries = []
    for t in manifest["triples"]:
        path = genus_dir(out, g) / f"{t['key']}.jsonl"
        if not path.exists():
            raise MissingData(f"shard {t['key']}", g)
        with open(path) as fh:
            entries.extend(RgEntry.from_json(json.loads(line)) for line in fh if line.strip())
    return entries


def write_graphs(out: Path, g: int, graphs: Sequence[MultiGraph]) -> Path:
    d = genus_dir(out, g)
    d.mkdir(parents=True, exist_ok=True)
    path = d / "C.jsonl"
    with open(path, "w") as fh:
        for gr in graphs:
            fh.write(_dump(gr.to_json()) + "\n")
    return path


def read_graphs(out: Path, g: int) -> list[MultiGraph]:
    path = genus_dir(out, g) / "C.jsonl"
    if not path.exists():
        raise MissingData("C file", g)
    with open(path) as fh:
        return [MultiGraph.from_json(json.loads(line)) for line in fh if line.strip()]
