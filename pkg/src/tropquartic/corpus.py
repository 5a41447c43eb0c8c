"""Corpus files: annotated lists of triangulation orbit representatives.

Format: blank-line-separated blocks. Each block is a header line
"# orbit <n> size <k> regular <bool> c_generic <bool>" followed by the
16-line triangulation text of the orbit representative (canonical form).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .triangulation import Triangulation, from_text, to_text


@dataclass(frozen=True)
class CorpusEntry:
    orbit: int
    size: int
    regular: bool
    c_generic: bool
    triangulation: Triangulation


def _format_bool(b: bool) -> str:
    return "true" if b else "false"


def _parse_bool(s: str) -> bool:
    if s not in ("true", "false"):
        raise ValueError(f"expected true/false, got {s!r}")
    return s == "true"


def write_corpus(entries: list[CorpusEntry], path: str | Path) -> None:
    blocks = []
    for e in entries:
        header = (
            f"# orbit {e.orbit} size {e.size} "
            f"regular {_format_bool(e.regular)} "
            f"c_generic {_format_bool(e.c_generic)}"
        )
        blocks.append(header + "\n" + to_text(e.triangulation))
    Path(path).write_text("\n".join(blocks))


def read_corpus(path: str | Path) -> list[CorpusEntry]:
    text = Path(path).read_text()
    entries = []
    for block in text.split("\n\n"):
        block = block.strip()
        if not block:
            continue
        lines = block.splitlines()
        header = lines[0]
        parts = header.split()
        if (
            len(parts) != 9
            or parts[0] != "#"
            or parts[1] != "orbit"
            or parts[3] != "size"
            or parts[5] != "regular"
            or parts[7] != "c_generic"
        ):
            raise ValueError(f"malformed corpus header: {header!r}")
        T = from_text("\n".join(lines[1:]))
        entries.append(
            CorpusEntry(
                orbit=int(parts[2]),
                size=int(parts[4]),
                regular=_parse_bool(parts[6]),
                c_generic=_parse_bool(parts[8]),
                triangulation=T,
            )
        )
    return entries
