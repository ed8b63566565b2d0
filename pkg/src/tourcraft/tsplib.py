"""TSPLIB file I/O: instance parsing, tour files, and the known-optima fixture.

Internal city indices are 0-based; TSPLIB files are 1-based. The conversion
happens exactly once in each direction, here.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional, Sequence

import numpy as np

from .errors import ParseError, ValidationError
from .instance import Instance, Tour

_SUPPORTED_EDGE_WEIGHT_TYPES = ("EUC_2D", "ATT", "CEIL_2D", "EXPLICIT")
_SUPPORTED_WEIGHT_FORMATS = ("FULL_MATRIX", "UPPER_ROW", "LOWER_DIAG_ROW")


@dataclass(frozen=True)
class OptimaTable:
    """Best known route length per instance name."""

    entries: Dict[str, int]

    def lookup(self, name: str) -> Optional[int]:
        return self.entries.get(name)


def _split_sections(text: str):
    """Yield (line_number, stripped_line) skipping blanks."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield lineno, line


def parse_tsplib(text: str) -> Instance:
    """Parse a TSPLIB instance (keyword header + coordinate or weight section).

    Unknown keywords are ignored; unsupported EDGE_WEIGHT_TYPE values and
    malformed numbers raise ParseError naming the line.
    """
    header: Dict[str, str] = {}
    coord_lines: List[tuple] = []
    weight_values: List[float] = []
    section = None

    for lineno, line in _split_sections(text):
        if line == "EOF":
            break
        upper = line.upper()
        if upper.startswith("NODE_COORD_SECTION"):
            section = "coords"
            continue
        if upper.startswith("EDGE_WEIGHT_SECTION"):
            section = "weights"
            continue
        if upper.startswith("DISPLAY_DATA_SECTION"):
            section = "ignored"
            continue
        if section == "coords":
            parts = line.split()
            if len(parts) < 3:
                raise ParseError(f"line {lineno}: coordinate line needs "
                                 f"'index x y', got {line!r}")
            try:
                coord_lines.append((float(parts[1]), float(parts[2])))
            except ValueError:
                raise ParseError(f"line {lineno}: malformed number in {line!r}")
            continue
        if section == "weights":
            try:
                weight_values.extend(float(tok) for tok in line.split())
            except ValueError:
                raise ParseError(f"line {lineno}: malformed number in {line!r}")
            continue
        if section == "ignored":
            continue
        if ":" in line:
            key, value = line.split(":", 1)
            header[key.strip().upper()] = value.strip()

    if "DIMENSION" not in header:
        raise ParseError("missing DIMENSION keyword")
    try:
        n = int(header["DIMENSION"])
    except ValueError:
        raise ParseError(f"malformed DIMENSION: {header['DIMENSION']!r}")

    kind = header.get("EDGE_WEIGHT_TYPE", "").upper()
    if kind not in _SUPPORTED_EDGE_WEIGHT_TYPES:
        raise ParseError(f"unsupported EDGE_WEIGHT_TYPE {kind!r}; supported: "
                         f"{', '.join(_SUPPORTED_EDGE_WEIGHT_TYPES)}")
    name = header.get("NAME", "unnamed")

    if kind == "EXPLICIT":
        fmt = header.get("EDGE_WEIGHT_FORMAT", "FULL_MATRIX").upper()
        if fmt not in _SUPPORTED_WEIGHT_FORMATS:
            raise ParseError(f"unsupported EDGE_WEIGHT_FORMAT {fmt!r}")
        w = _assemble_weights(weight_values, n, fmt)
        return Instance(name=name, n=n, kind="EXPLICIT", explicit_weights=w)

    if len(coord_lines) != n:
        raise ParseError(f"DIMENSION is {n} but found {len(coord_lines)} "
                         f"coordinate lines")
    return Instance(name=name, n=n, kind=kind, coords=tuple(coord_lines))


def _assemble_weights(values: List[float], n: int, fmt: str) -> np.ndarray:
    w = np.zeros((n, n), dtype=float)
    if fmt == "FULL_MATRIX":
        if len(values) != n * n:
            raise ParseError(f"FULL_MATRIX needs {n * n} values, got {len(values)}")
        w = np.asarray(values, dtype=float).reshape(n, n)
        if not np.allclose(w, w.T):
            raise ValidationError("explicit FULL_MATRIX is not symmetric")
    elif fmt == "UPPER_ROW":
        expected = n * (n - 1) // 2
        if len(values) != expected:
            raise ParseError(f"UPPER_ROW needs {expected} values, got {len(values)}")
        it = iter(values)
        for i in range(n):
            for j in range(i + 1, n):
                v = next(it)
                w[i, j] = w[j, i] = v
    elif fmt == "LOWER_DIAG_ROW":
        expected = n * (n + 1) // 2
        if len(values) != expected:
            raise ParseError(f"LOWER_DIAG_ROW needs {expected} values, "
                             f"got {len(values)}")
        it = iter(values)
        for i in range(n):
            for j in range(i + 1):
                v = next(it)
                w[i, j] = w[j, i] = v
    np.fill_diagonal(w, 0.0)
    return w


def write_tour(tour: Tour, name: str = "", instance_name: str = "tour") -> str:
    """Serialize a tour in TSPLIB .tour format (1-based, -1 terminated)."""
    label = name or instance_name
    lines = [f"NAME: {label}",
             "TYPE: TOUR",
             f"DIMENSION: {len(tour.order)}",
             "TOUR_SECTION"]
    lines.extend(str(c + 1) for c in tour.order)
    lines.append("-1")
    lines.append("EOF")
    return "\n".join(lines) + "\n"


def parse_tour(text: str) -> List[int]:
    """Read a TSPLIB .tour file back into a 0-based visiting order."""
    order: List[int] = []
    in_section = False
    for lineno, line in _split_sections(text):
        upper = line.upper()
        if upper.startswith("TOUR_SECTION"):
            in_section = True
            continue
        if not in_section or upper == "EOF":
            continue
        for tok in line.split():
            if tok == "-1":
                return order
            try:
                order.append(int(tok) - 1)
            except ValueError:
                raise ParseError(f"line {lineno}: malformed tour index {tok!r}")
    return order


def load_optima(text: str) -> OptimaTable:
    """Parse a two-column name/length fixture; '#' starts a comment."""
    entries: Dict[str, int] = {}
    for lineno, line in _split_sections(text):
        if line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'name length', got {line!r}")
        name, raw = parts
        try:
            length = int(raw)
        except ValueError:
            raise ParseError(f"line {lineno}: malformed length {raw!r}")
        if name in entries:
            raise ValidationError(f"duplicate optimum entry for {name!r}")
        if length <= 0:
            raise ValidationError(f"non-positive optimum for {name!r}: {length}")
        entries[name] = length
    return OptimaTable(entries=entries)


def default_optima() -> OptimaTable:
    """The bundled best-known-length fixture."""
    text = resources.files("tourcraft.data").joinpath("optima.txt").read_text()
    return load_optima(text)
