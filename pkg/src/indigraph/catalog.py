"""The built-in group catalog, user catalog files, and Cayley-table files.

The master list covers every cyclic group up to order 210 (the planarity
sweep needs the full range of prime-factorization shapes) plus a spread of
dihedral, permutation, elementary-abelian, direct-product and semidirect
constructions up to order 48, and the order-60 alternating group as the
insoluble probe subject.  `--max-order` style filtering happens here.
"""

import json
import os
from dataclasses import dataclass

import numpy as np

from .errors import CatalogError, MalformedTable
from .groups import group_from_cayley_table
from .recipes import make_named_group, parse_recipe, recipe_order

DEFAULT_MAX_ORDER = 48


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    recipe: str  # make_named_group grammar; '' for table-file entries
    table_path: str  # '' for recipe entries
    order: int

    def build(self):
        if self.recipe:
            group = make_named_group(self.recipe)
        else:
            group = import_cayley(self.table_path)
        group.origin = self.name
        return group


def _recipe_entry(name, recipe):
    return CatalogEntry(name, recipe, "", recipe_order(parse_recipe(recipe)))


_DIRECTS = (
    ("C2xC4", "direct(cyclic(2),cyclic(4))"),
    ("C2xC6", "direct(cyclic(2),cyclic(6))"),
    ("C2xC8", "direct(cyclic(2),cyclic(8))"),
    ("C2xC10", "direct(cyclic(2),cyclic(10))"),
    ("C2xC12", "direct(cyclic(2),cyclic(12))"),
    ("C4xC4", "direct(cyclic(4),cyclic(4))"),
    ("C3xC9", "direct(cyclic(3),cyclic(9))"),
    ("C4xC8", "direct(cyclic(4),cyclic(8))"),
    ("C6xC6", "direct(cyclic(6),cyclic(6))"),
    ("C3xS3", "direct(cyclic(3),symmetric(3))"),
    ("C2xD4", "direct(cyclic(2),dihedral(4))"),
    ("C2xQ8", "direct(cyclic(2),quaternion8)"),
    ("C2xA4", "direct(cyclic(2),alternating(4))"),
    ("C4xS3", "direct(cyclic(4),symmetric(3))"),
    ("C2xD6", "direct(cyclic(2),dihedral(6))"),
    ("C3xA4", "direct(cyclic(3),alternating(4))"),
    ("S3xS3", "direct(symmetric(3),symmetric(3))"),
    ("C2xS4", "direct(cyclic(2),symmetric(4))"),
)

_ELEMENTARY = (
    ("C2^2", "elementary_abelian(2,2)"),
    ("C2^3", "elementary_abelian(2,3)"),
    ("C2^4", "elementary_abelian(2,4)"),
    ("C2^5", "elementary_abelian(2,5)"),
    ("C3^2", "elementary_abelian(3,2)"),
    ("C3^3", "elementary_abelian(3,3)"),
    ("C5^2", "elementary_abelian(5,2)"),
)


def _master():
    entries = []
    for n in range(1, 211):
        entries.append(_recipe_entry(f"C{n}", f"cyclic({n})"))
    for n in range(4, 25):
        entries.append(_recipe_entry(f"D{n}", f"dihedral({n})"))
    entries.append(_recipe_entry("Q8", "quaternion8"))
    entries.append(_recipe_entry("S3", "symmetric(3)"))
    entries.append(_recipe_entry("S4", "symmetric(4)"))
    entries.append(_recipe_entry("A4", "alternating(4)"))
    entries.append(_recipe_entry("A5", "alternating(5)"))
    for name, recipe in _ELEMENTARY:
        entries.append(_recipe_entry(name, recipe))
    for name, recipe in _DIRECTS:
        entries.append(_recipe_entry(name, recipe))
    entries.append(_recipe_entry("C3:C4", "semidirect_c3_c4"))
    entries.append(_recipe_entry("C5:C4", "semidirect_c5_c4"))
    return tuple(sorted(entries, key=lambda e: (e.order, e.name)))


MASTER = _master()


def default_catalog(max_order=DEFAULT_MAX_ORDER):
    """Master-list entries of order <= max_order, sorted by (order, name)."""
    return tuple(e for e in MASTER if e.order <= max_order)


def catalog_entry(name):
    for e in MASTER:
        if e.name == name:
            return e
    raise CatalogError(f"no catalog entry named {name!r}")


# ------------------------------------------------------------- catalog files

def load_catalog_file(path):
    """A user catalog: JSON {"entries": [{"name", "recipe"} | {"name",
    "table"}]}.  Table paths are resolved relative to the catalog file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CatalogError(f"cannot read catalog file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "entries" not in data:
        raise CatalogError(f'catalog file {path!r} needs a top-level "entries" list')
    base = os.path.dirname(os.path.abspath(path))
    entries = []
    seen = set()
    for i, raw in enumerate(data["entries"]):
        if not isinstance(raw, dict) or "name" not in raw:
            raise CatalogError(f'catalog entry #{i} needs a "name"')
        name = raw["name"]
        if name in seen:
            raise CatalogError(f"duplicate catalog name {name!r}")
        seen.add(name)
        if "recipe" in raw:
            try:
                entries.append(_recipe_entry(name, raw["recipe"]))
            except Exception as exc:
                raise CatalogError(
                    f"catalog entry {name!r}: bad recipe {raw['recipe']!r}: {exc}"
                ) from exc
        elif "table" in raw:
            tpath = os.path.join(base, raw["table"])
            order = _peek_table_order(tpath)
            entries.append(CatalogEntry(name, "", tpath, order))
        else:
            raise CatalogError(f'catalog entry {name!r} needs "recipe" or "table"')
    return tuple(entries)


def _peek_table_order(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            first = fh.readline()
    except OSError as exc:
        raise CatalogError(f"cannot read table file {path!r}: {exc}") from exc
    try:
        return int(first.strip())
    except ValueError as exc:
        raise CatalogError(
            f"table file {path!r}: line 1 must be the group order"
        ) from exc


# --------------------------------------------------------- Cayley table files

def import_cayley(path):
    """Cayley-table file -> validated group.

    Format: line 1 is n; the next n non-blank lines are rows of n indices
    (0-based); optional trailing lines 'label <index> <string>'.  '#' starts
    a comment.  Errors carry the offending line number."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw_lines = fh.readlines()
    except OSError as exc:
        raise MalformedTable(f"cannot read {path!r}: {exc}") from exc

    lines = []
    for lineno, text in enumerate(raw_lines, start=1):
        body = text.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise MalformedTable(f"{path}: empty table file")
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise MalformedTable(f"{path}:{lineno}: line 1 must be the group order")
    if n < 1:
        raise MalformedTable(f"{path}:{lineno}: order must be >= 1")
    if len(lines) < 1 + n:
        raise MalformedTable(
            f"{path}: truncated table: expected {n} rows, found {len(lines) - 1}"
        )
    rows = []
    for r in range(n):
        lineno, body = lines[1 + r]
        parts = body.split()
        if len(parts) != n:
            raise MalformedTable(
                f"{path}:{lineno}: row {r} has {len(parts)} entries, expected {n}"
            )
        try:
            row = [int(p) for p in parts]
        except ValueError:
            raise MalformedTable(f"{path}:{lineno}: row {r} has a non-integer entry")
        rows.append(row)
    labels = None
    for lineno, body in lines[1 + n:]:
        parts = body.split(None, 2)
        if len(parts) != 3 or parts[0] != "label":
            raise MalformedTable(
                f"{path}:{lineno}: expected 'label <index> <string>', got {body!r}"
            )
        try:
            idx = int(parts[1])
        except ValueError:
            raise MalformedTable(f"{path}:{lineno}: label index must be an integer")
        if not 0 <= idx < n:
            raise MalformedTable(f"{path}:{lineno}: label index {idx} out of range")
        if labels is None:
            labels = [f"g{i}" for i in range(n)]
        labels[idx] = parts[2]
    table = np.array(rows, dtype=np.int64)
    return group_from_cayley_table(table, labels=labels, origin=os.path.basename(path))
