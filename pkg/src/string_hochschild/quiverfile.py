"""Plain-text presentation files: parse and emit bound quivers.

The format has four sections, three of them required::

    # lines starting the game
    vertices: 1, 2
    arrows:
      a: 1 -> 2
      b: 2 -> 1
    relations:
      a b
      b a
    char: 0

A section header is a line starting with one of the known section names
followed by a colon; entries may sit on the header line after the colon
and/or on following lines, separated by commas or newlines.  ``#`` starts a
comment anywhere.  An arrow entry is ``label: source -> target``; a
relation entry is two arrow labels separated by whitespace (first arrow,
then the arrow it composes into).  ``char`` takes a single value, 0 or a
prime, and defaults to 0.

Parse errors carry the 1-based line and column of the offending token.
``emit_quiver`` writes the canonical form (one entry per line, ids in
order); parse -> emit -> parse is the identity on the normalized data.
"""

from __future__ import annotations

from .linalg import FieldSpec
from .quiver import BoundQuiver

SECTIONS = ("vertices", "arrows", "relations", "char")


class QuiverParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


def _split_entries(chunk: str, line_no: int, col_offset: int) -> list[tuple[str, int, int]]:
    """Comma-separated entries of one physical line, with positions."""
    out: list[tuple[str, int, int]] = []
    pos = 0
    for piece in chunk.split(","):
        stripped = piece.strip()
        if stripped:
            col = col_offset + pos + piece.index(stripped[0]) + 1
            out.append((stripped, line_no, col))
        pos += len(piece) + 1
    return out


def parse_quiver_text(text: str) -> tuple[BoundQuiver, FieldSpec]:
    entries: dict[str, list[tuple[str, int, int]]] = {s: [] for s in SECTIONS}
    declared: set[str] = set()
    current: str | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head, sep, rest = line.partition(":")
        if sep and head.strip() in SECTIONS:
            current = head.strip()
            if current in declared:
                raise QuiverParseError(
                    f"duplicate section {current!r}",
                    line_no,
                    len(raw) - len(raw.lstrip()) + 1,
                )
            declared.add(current)
            entries[current].extend(_split_entries(rest, line_no, len(head) + 1))
            continue
        if current is None:
            raise QuiverParseError(
                f"expected a section header ({', '.join(SECTIONS)}), got {line.strip()!r}",
                line_no,
                len(raw) - len(raw.lstrip()) + 1,
            )
        entries[current].extend(_split_entries(line, line_no, 0))

    for required in ("vertices", "arrows", "relations"):
        if required not in declared:
            raise QuiverParseError(f"missing required section {required!r}")

    vertices: list[str] = []
    seen_vertices: set[str] = set()
    for name, line_no, col in entries["vertices"]:
        if " " in name or "\t" in name:
            raise QuiverParseError(f"vertex name {name!r} contains whitespace", line_no, col)
        if name in seen_vertices:
            raise QuiverParseError(f"duplicate vertex {name!r}", line_no, col)
        seen_vertices.add(name)
        vertices.append(name)
    if not vertices:
        raise QuiverParseError("no vertices declared")

    arrows: list[tuple[str, str, str]] = []
    seen_arrows: set[str] = set()
    for entry, line_no, col in entries["arrows"]:
        label, sep, ends = entry.partition(":")
        label = label.strip()
        if not sep or not label:
            raise QuiverParseError(
                f"arrow entry {entry!r} is not of the form 'label: source -> target'",
                line_no,
                col,
            )
        src, sep2, tgt = ends.partition("->")
        src, tgt = src.strip(), tgt.strip()
        if not sep2 or not src or not tgt:
            raise QuiverParseError(
                f"arrow {label!r} needs 'source -> target', got {ends.strip()!r}",
                line_no,
                col,
            )
        if label in seen_arrows:
            raise QuiverParseError(f"duplicate arrow {label!r}", line_no, col)
        seen_arrows.add(label)
        for v in (src, tgt):
            if v not in seen_vertices:
                raise QuiverParseError(
                    f"arrow {label!r} references unknown vertex {v!r}", line_no, col
                )
        arrows.append((label, src, tgt))

    relations: list[tuple[str, str]] = []
    for entry, line_no, col in entries["relations"]:
        parts = entry.split()
        if len(parts) != 2:
            raise QuiverParseError(
                f"relation entry {entry!r} must be two arrow labels", line_no, col
            )
        for label in parts:
            if label not in seen_arrows:
                raise QuiverParseError(
                    f"relation references unknown arrow {label!r}", line_no, col
                )
        relations.append((parts[0], parts[1]))

    characteristic = 0
    if entries["char"]:
        if len(entries["char"]) > 1:
            _, line_no, col = entries["char"][1]
            raise QuiverParseError("char declared more than once", line_no, col)
        value, line_no, col = entries["char"][0]
        try:
            characteristic = int(value)
        except ValueError:
            raise QuiverParseError(f"char must be an integer, got {value!r}", line_no, col)
        try:
            field = FieldSpec(characteristic)
        except ValueError as exc:
            raise QuiverParseError(str(exc), line_no, col)
    else:
        field = FieldSpec(0)

    try:
        bq = BoundQuiver(vertices, arrows, relations)
    except ValueError as exc:
        raise QuiverParseError(str(exc))
    return bq, field


def parse_quiver_file(path: str) -> tuple[BoundQuiver, FieldSpec]:
    with open(path, encoding="utf-8") as handle:
        return parse_quiver_text(handle.read())


def emit_quiver(bq: BoundQuiver, field: FieldSpec) -> str:
    """Canonical text form: one entry per line, everything in id order."""
    lines = ["vertices: " + ", ".join(bq.vertex_labels)]
    lines.append("arrows:")
    for a in bq.arrows:
        lines.append(
            f"  {a.label}: {bq.vertex_labels[a.source]} -> {bq.vertex_labels[a.target]}"
        )
    lines.append("relations:")
    for x, y in sorted(bq.relations):
        lines.append(f"  {bq.arrows[x].label} {bq.arrows[y].label}")
    lines.append(f"char: {field.characteristic}")
    return "\n".join(lines) + "\n"
