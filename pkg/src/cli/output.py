import csv
import json
import sys
from dataclasses import dataclass, field
from typing import Any, TextIO


@dataclass
class CommandOutput:
    """What a command prints: a JSON record, its CSV rows and a pretty text form."""
    record: Any
    rows: list[list[Any]] = field(default_factory=list)
    text: str | None = None


def render(output: CommandOutput, fmt: str, pretty: bool, stream: TextIO | None = None) -> None:
    """
    Write one command result.

    --pretty wins when the command has a text form; otherwise JSON (two-space
    indent, keys in construction order) or CSV with "\\n" line endings.
    """
    stream = stream or sys.stdout
    if pretty and output.text is not None:
        stream.write(output.text + "\n")
    elif fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerows(output.rows)
    else:
        stream.write(json.dumps(output.record, ensure_ascii=False, indent=2) + "\n")
