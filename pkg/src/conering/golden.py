"""Access to the shipped golden files (or a replacement directory)."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .groebner import GroebnerBasis, parse_basis
from .series import IntSeries, RationalFunction


class GoldenError(Exception):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = str(path)


def default_dir() -> Path:
    return Path(str(resources.files("conering") / "golden"))


class Golden:
    def __init__(self, root: str | Path | None = None):
        self.root = Path(root) if root is not None else default_dir()

    def path(self, rel: str) -> Path:
        return self.root / rel

    def text(self, rel: str) -> str:
        p = self.path(rel)
        try:
            return p.read_text()
        except OSError as exc:
            raise GoldenError(p, f"cannot read ({exc.strerror})") from None

    def json(self, rel: str):
        try:
            return json.loads(self.text(rel))
        except json.JSONDecodeError as exc:
            raise GoldenError(self.path(rel), f"invalid JSON ({exc.msg})") from None

    def rational(self, rel: str) -> RationalFunction:
        try:
            return RationalFunction.from_json(self.json(rel))
        except (KeyError, TypeError, ValueError) as exc:
            raise GoldenError(self.path(rel), f"not a rational function ({exc})") from None

    def series(self, rel: str) -> IntSeries:
        try:
            return IntSeries.from_json(self.json(rel))
        except (KeyError, TypeError, ValueError) as exc:
            raise GoldenError(self.path(rel), f"not a series ({exc})") from None

    def basis(self, rel: str) -> GroebnerBasis:
        try:
            return parse_basis(self.text(rel))
        except (KeyError, ValueError, IndexError) as exc:
            raise GoldenError(self.path(rel), f"not a basis file ({exc})") from None
