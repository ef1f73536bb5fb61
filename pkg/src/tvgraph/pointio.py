"""Point-set file format: CSV with a header comment.

    # dim=<d> scalar=<rational|cyclotomic:m>
    x0,y0,...
    x1,y1,...

Rational entries are `p/q` or plain integers; cyclotomic entries are
bracketed, semicolon-separated basis-coefficient lists such as
`[1/2;0;-1/2]`.  Round-trips are bit-exact.
"""
from __future__ import annotations

import re

from .errors import InvalidArguments
from .geometry import PointConfig
from .scalars import cyclotomic_field, format_scalar, parse_scalar

_HEADER_RE = re.compile(r"#\s*dim=(\d+)\s+scalar=(rational|cyclotomic:\d+)\s*$")


def dump_config(config: PointConfig) -> str:
    lines = [f"# dim={config.dim} scalar={config.scalar_kind}"]
    for point in config.points:
        lines.append(",".join(format_scalar(c) for c in point))
    return "\n".join(lines) + "\n"


def save_config(config: PointConfig, path) -> None:
    with open(path, "w") as fh:
        fh.write(dump_config(config))


def parse_config(text: str) -> PointConfig:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidArguments("empty point-set file")
    header = _HEADER_RE.match(lines[0])
    if header is None:
        raise InvalidArguments(f"malformed header line: {lines[0]!r}")
    dim = int(header.group(1))
    scalar_spec = header.group(2)
    field = None
    if scalar_spec.startswith("cyclotomic:"):
        field = cyclotomic_field(int(scalar_spec.split(":")[1]))
    points = []
    for line in lines[1:]:
        entries = _split_entries(line)
        if len(entries) != dim:
            raise InvalidArguments(f"expected {dim} coordinates, got {len(entries)}: {line!r}")
        points.append(tuple(parse_scalar(e, field) for e in entries))
    if not points:
        raise InvalidArguments("point-set file has no points")
    return PointConfig(dim, tuple(points), field)


def load_config(path) -> PointConfig:
    with open(path) as fh:
        return parse_config(fh.read())


def _split_entries(line: str):
    """Split on commas outside brackets (cyclotomic literals are comma-free,
    but stay safe against future bracketed forms)."""
    entries = []
    depth = 0
    current = []
    for ch in line:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            entries.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    entries.append("".join(current).strip())
    return [e for e in entries if e]
