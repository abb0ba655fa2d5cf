"""Versioned golden I_theta tables shipped with the package."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

GOLDEN_FILE = "itheta_golden.json"


@dataclass(frozen=True)
class GoldenCase:
    family: str
    rank: int
    auto: str
    itheta: frozenset[tuple[int, ...]]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}/{self.auto}"


def load_golden() -> tuple[int, list[GoldenCase]]:
    """Return ``(version, cases)`` from the bundled data file."""
    raw = json.loads(resources.files("weyltwist.data").joinpath(GOLDEN_FILE).read_text())
    cases = [
        GoldenCase(c["type"], c["rank"], c["auto"], frozenset(tuple(sorted(s)) for s in c["itheta"]))
        for c in raw["cases"]
    ]
    return raw["version"], cases


def diff_itheta(expected, computed) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Subsets missing from ``computed`` and unexpected extras, both sorted."""
    exp = {tuple(sorted(s)) for s in expected}
    got = {tuple(sorted(s)) for s in computed}
    return sorted(exp - got, key=lambda s: (len(s), s)), sorted(got - exp, key=lambda s: (len(s), s))
