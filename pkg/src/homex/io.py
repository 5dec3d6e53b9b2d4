"""Reading and writing facet lists.

``.sc`` files hold one facet per line as whitespace-separated vertex tokens;
lines starting with ``#`` and blank lines are skipped. Tokens are arbitrary
strings, numbered in order of first appearance. The JSON form is
``{"facets": [[...], ...]}`` with the same token rules.
"""

from __future__ import annotations

import json
from pathlib import Path

from homex.complex_core import SimplicialComplex
from homex.errors import ValidationError


class SymbolTable:
    """Maps external vertex tokens to dense ids in first-seen order."""

    def __init__(self):
        self.ids: dict[str, int] = {}
        self.labels: list[str] = []

    def id(self, token) -> int:
        token = str(token)
        if token not in self.ids:
            self.ids[token] = len(self.labels)
            self.labels.append(token)
        return self.ids[token]


def _facet(tokens, table, where):
    ids = [table.id(t) for t in tokens]
    if len(set(ids)) != len(ids):
        raise ValidationError(f"{where}: facet repeats a vertex")
    return ids


def parse_sc(text: str, source: str = "<string>") -> tuple[SimplicialComplex, list[str]]:
    table = SymbolTable()
    facets = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        facets.append(_facet(stripped.split(), table, f"{source}:{lineno}"))
    return SimplicialComplex(facets), table.labels


def parse_json(text: str, source: str = "<string>") -> tuple[SimplicialComplex, list[str]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{source}:{exc.lineno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(data, dict) or not isinstance(data.get("facets"), list):
        raise ValidationError(f"{source}: expected an object with a 'facets' list")
    table = SymbolTable()
    facets = []
    for i, f in enumerate(data["facets"]):
        if not isinstance(f, list) or not f:
            raise ValidationError(f"{source}: facet #{i} is not a nonempty list")
        facets.append(_facet(f, table, f"{source}: facet #{i}"))
    return SimplicialComplex(facets), table.labels


def load_complex(path) -> tuple[SimplicialComplex, list[str]]:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        return parse_json(text, str(path))
    return parse_sc(text, str(path))


def _token(v, labels):
    return labels[v] if labels is not None else str(v)


def format_sc(X: SimplicialComplex, labels=None, header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    lines += [" ".join(_token(v, labels) for v in f) for f in X.facets]
    return "\n".join(lines) + "\n"


def format_json(X: SimplicialComplex, labels=None) -> str:
    facets = [[_token(v, labels) if labels is not None else v for v in f] for f in X.facets]
    return json.dumps({"facets": facets}) + "\n"


def save_complex(X: SimplicialComplex, path, labels=None, header: str | None = None):
    path = Path(path)
    text = format_json(X, labels) if path.suffix == ".json" else format_sc(X, labels, header)
    path.write_text(text, encoding="utf-8")
