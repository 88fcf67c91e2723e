"""On-disk formats for swap lists and tangles.

The canonical list format is a JSON document with exactly two fields::

    {"n": 3, "swaps": [[1, 2, 1], [2, 3, 2]]}

``swaps`` holds ``[i, j, count]`` triples, 1-based, i < j, count >= 1, no
duplicate pairs; unknown fields are rejected.  A convenience matrix form is
also accepted on input: n lines of n integers forming a symmetric matrix
with zero diagonal.  Tangles use ``{"n": ..., "rows": [...]}`` where each
row is a wire order; adjacency of consecutive rows is re-validated on load.
Serialization is canonical, so parse(serialize(x)) == x byte-for-byte back.
"""
from __future__ import annotations

import json

from .core import Permutation, SwapList, Tangle


class FormatError(ValueError):
    """Malformed input document; the message carries line/field context."""


def serialize_list(lst: SwapList) -> str:
    swaps = [[i, j, c] for i, j, c in lst.entries]
    return json.dumps({"n": lst.n, "swaps": swaps}, indent=2) + "\n"


def serialize_tangle(tangle: Tangle) -> str:
    rows = [list(p.wires) for p in tangle.perms]
    return json.dumps({"n": tangle.n, "rows": rows}, indent=2) + "\n"


def parse_list(text: str) -> SwapList:
    """Parse either the canonical JSON form or the matrix form."""
    stripped = text.lstrip()
    if not stripped:
        raise FormatError("empty list document")
    if stripped.startswith("{"):
        return _parse_list_json(text)
    return _parse_list_matrix(text)


def _load_json_object(text: str, allowed: set[str]) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FormatError("top-level JSON value must be an object")
    unknown = set(obj) - allowed
    if unknown:
        raise FormatError(f"unknown fields: {sorted(unknown)}")
    missing = allowed - set(obj)
    if missing:
        raise FormatError(f"missing fields: {sorted(missing)}")
    return obj


def _parse_list_json(text: str) -> SwapList:
    obj = _load_json_object(text, {"n", "swaps"})
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise FormatError("field 'n' must be a positive integer")
    swaps = obj["swaps"]
    if not isinstance(swaps, list):
        raise FormatError("field 'swaps' must be an array of [i, j, count] triples")
    entries = []
    seen = set()
    for index, triple in enumerate(swaps):
        where = f"swaps[{index}]"
        if (
            not isinstance(triple, list)
            or len(triple) != 3
            or not all(isinstance(v, int) for v in triple)
        ):
            raise FormatError(f"{where}: expected three integers")
        i, j, count = triple
        if not (1 <= i < j <= n):
            raise FormatError(f"{where}: pair ({i}, {j}) is not ordered within 1..{n}")
        if count < 1:
            raise FormatError(f"{where}: count must be at least 1")
        if (i, j) in seen:
            raise FormatError(f"{where}: duplicate pair ({i}, {j})")
        seen.add((i, j))
        entries.append((i, j, count))
    return SwapList(n, tuple(sorted(entries)))


def _parse_list_matrix(text: str) -> SwapList:
    rows: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers") from None
    n = len(rows)
    if n == 0:
        raise FormatError("empty matrix")
    mult = {}
    for r, row in enumerate(rows, start=1):
        if len(row) != n:
            raise FormatError(f"line {r}: expected {n} columns, found {len(row)}")
        for c, value in enumerate(row, start=1):
            if value < 0:
                raise FormatError(f"line {r}: negative multiplicity")
            if r == c and value:
                raise FormatError(f"line {r}: diagonal must be zero")
            if c > r and value != rows[c - 1][r - 1]:
                raise FormatError(f"line {r}: matrix is not symmetric at ({r}, {c})")
            if c > r and value:
                mult[(r, c)] = value
    return SwapList.from_mult(n, mult)


def parse_tangle(text: str) -> Tangle:
    obj = _load_json_object(text, {"n", "rows"})
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise FormatError("field 'n' must be a positive integer")
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows:
        raise FormatError("field 'rows' must be a non-empty array of wire orders")
    perms = []
    for index, row in enumerate(rows):
        where = f"rows[{index}]"
        if (
            not isinstance(row, list)
            or len(row) != n
            or not all(isinstance(v, int) for v in row)
        ):
            raise FormatError(f"{where}: expected {n} integers")
        try:
            perms.append(Permutation(tuple(row)))
        except ValueError as exc:
            raise FormatError(f"{where}: {exc}") from None
    try:
        return Tangle(tuple(perms))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
