"""Role and box-operator inventories.

Both inventories are plain-text config files, one name per line, with ``#``
starting a comment line.  The defaults shipped under ``sbnkit/data/`` cover
the thematic roles and discourse operators used throughout the toolkit.
Unknown role names are tolerated downstream (the lexer flags them with a
warning), so corpus drift does not hard-fail; unknown all-caps tokens are
treated as roles, never as box operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path


def load_inventory(path: str | Path) -> frozenset[str]:
    """Read one name per line; blank lines and ``#`` comments are skipped."""
    names = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            names.append(line)
    return frozenset(names)


def _packaged(name: str) -> frozenset[str]:
    text = resources.files("sbnkit").joinpath("data", name).read_text(encoding="utf-8")
    return frozenset(l.strip() for l in text.splitlines() if l.strip() and not l.startswith("#"))


@dataclass(frozen=True)
class Inventories:
    """The configured role and box-operator name sets."""

    roles: frozenset[str]
    operators: frozenset[str]

    @classmethod
    def default(cls) -> "Inventories":
        return cls(roles=_packaged("roles.txt"), operators=_packaged("operators.txt"))

    @classmethod
    def from_files(cls, roles_path: str | Path | None, operators_path: str | Path | None) -> "Inventories":
        base = cls.default()
        roles = load_inventory(roles_path) if roles_path else base.roles
        operators = load_inventory(operators_path) if operators_path else base.operators
        return cls(roles=roles, operators=operators)


DEFAULT_INVENTORIES = Inventories.default()
