"""Plain-text formats for polygons and exploration traces.

Polygon file::

    grid hex
    # comment
    0 0
    1 0

Trace file::

    trace smartdfs hex
    start 1 0
    split 0 1 0 layer=1 order=1,0 K0=II:0,0 K1=II:2,0;3,0
    1 1 0 2 0
    2 2 0 3 0

Step lines are ``index from to``; a ``split`` line follows the step that
first entered the split cell (index 0 for the start cell).
"""

from __future__ import annotations

from .explore import ComponentType, ExplorationTrace, SplitEvent
from .grid import Cell, GridKind
from .polygon import GridPolygon, PolygonError, components


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _ints(parts: list[str], number: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(parts)!r}", number) from None


def parse_polygon(text: str) -> GridPolygon:
    lines = _content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise FormatError("empty document") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "grid":
        raise FormatError("first line must be 'grid hex' or 'grid tri'", number)
    try:
        kind = GridKind.parse(parts[1])
    except ValueError as exc:
        raise FormatError(str(exc), number) from None

    cells: list[Cell] = []
    seen: dict[Cell, int] = {}
    for number, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("expected two integers per cell line", number)
        cell = tuple(_ints(parts, number))
        if cell in seen:
            raise FormatError(f"duplicate cell {cell[0]} {cell[1]} (first on line {seen[cell]})", number)
        seen[cell] = number
        cells.append(cell)
    if not cells:
        raise FormatError("polygon has no cells")
    comps = components(cells, kind)
    if len(comps) > 1:
        raise FormatError(f"cells are disconnected ({len(comps)} components)")
    try:
        return GridPolygon(kind, frozenset(cells))
    except (PolygonError, OverflowError) as exc:
        raise FormatError(str(exc)) from None


def serialize_polygon(poly: GridPolygon) -> str:
    out = [f"grid {poly.kind.value}"]
    out += [f"{q} {r}" for q, r in sorted(poly.free)]
    return "\n".join(out) + "\n"


def _cell_list(cells) -> str:
    return ";".join(f"{q},{r}" for q, r in sorted(cells))


def serialize_trace(trace: ExplorationTrace) -> str:
    out = [f"trace {trace.strategy} {trace.kind.value}", f"start {trace.start[0]} {trace.start[1]}"]
    first_seen: dict[Cell, int] = {}
    for i, c in enumerate(trace.walk):
        first_seen.setdefault(c, i)
    events_at: dict[int, list[SplitEvent]] = {}
    for ev in trace.events:
        events_at.setdefault(first_seen[ev.at], []).append(ev)

    def emit_events(step: int) -> None:
        for ev in events_at.get(step, ()):
            comps = " ".join(
                f"K{i}={t}:{_cell_list(k)}" for i, (k, t) in enumerate(zip(ev.components, ev.types))
            )
            order = ",".join(str(i) for i in ev.order)
            out.append(f"split {step} {ev.at[0]} {ev.at[1]} layer={ev.layer} order={order} {comps}")

    emit_events(0)
    for i, (a, b) in enumerate(zip(trace.walk, trace.walk[1:]), start=1):
        out.append(f"{i} {a[0]} {a[1]} {b[0]} {b[1]}")
        emit_events(i)
    return "\n".join(out) + "\n"


def parse_trace(text: str) -> ExplorationTrace:
    lines = _content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise FormatError("empty trace") from None
    parts = header.split()
    if len(parts) != 3 or parts[0] != "trace":
        raise FormatError("first line must be 'trace <strategy> <grid>'", number)
    strategy = parts[1]
    try:
        kind = GridKind.parse(parts[2])
    except ValueError as exc:
        raise FormatError(str(exc), number) from None
    try:
        number, line = next(lines)
    except StopIteration:
        raise FormatError("missing start line") from None
    parts = line.split()
    if len(parts) != 3 or parts[0] != "start":
        raise FormatError("second line must be 'start <a> <b>'", number)
    start = tuple(_ints(parts[1:], number))

    walk = [start]
    events = []
    for number, line in lines:
        parts = line.split()
        if parts[0] == "split":
            events.append(_parse_split(parts, number))
            continue
        if len(parts) != 5:
            raise FormatError("step lines need an index and two cells", number)
        idx, a0, a1, b0, b1 = _ints(parts, number)
        if idx != len(walk):
            raise FormatError(f"expected step {len(walk)}, got {idx}", number)
        if (a0, a1) != walk[-1]:
            raise FormatError("step does not continue from the previous cell", number)
        walk.append((b0, b1))
    return ExplorationTrace(kind, start, tuple(walk), strategy, tuple(events))


def _parse_split(parts: list[str], number: int) -> SplitEvent:
    if len(parts) < 6:
        raise FormatError("malformed split line", number)
    at = tuple(_ints(parts[2:4], number))
    fields = dict(p.split("=", 1) for p in parts[4:] if "=" in p)
    try:
        layer = int(fields.pop("layer"))
        order = tuple(int(x) for x in fields.pop("order").split(","))
        comps, types = [], []
        for i in range(len(fields)):
            tag, cells = fields[f"K{i}"].split(":", 1)
            types.append(ComponentType(tag))
            comps.append(frozenset(tuple(int(v) for v in c.split(",")) for c in cells.split(";")))
    except (KeyError, ValueError):
        raise FormatError("malformed split line", number) from None
    return SplitEvent(at, layer, tuple(comps), tuple(types), order)
