"""Deterministic report documents with machine and human renderings.

The machine format is line oriented: scalar items are ``key = value``
lines and table items are a ``key:`` header followed by one row per line.
Rows never contain `` = `` and never end with a colon, so the format
parses back unambiguously; ``parse_machine`` inverts ``render_machine``
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Report:
    command: str
    items: tuple[tuple[str, object], ...] = field(default_factory=tuple)

    def value(self, key: str):
        for k, v in self.items:
            if k == key:
                return v
        raise KeyError(key)


class ReportBuilder:
    def __init__(self, command: str):
        self.command = command
        self._items: list[tuple[str, object]] = []

    def add(self, key: str, value) -> None:
        """Add a scalar item; values are canonicalized to strings."""
        self._items.append((key, _scalar(value)))

    def add_array(self, key: str, values) -> None:
        self._items.append((key, ",".join(str(int(v)) for v in values)))

    def add_table(self, key: str, rows) -> None:
        """Add a block item, one string per row."""
        self._items.append((key, tuple(_row(r) for r in rows)))

    def build(self) -> Report:
        return Report(command=self.command, items=tuple(self._items))


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _row(row) -> str:
    if isinstance(row, str):
        return row
    return ",".join(str(int(v)) for v in row)


def render_machine(report: Report) -> str:
    lines = [f"command = {report.command}"]
    for key, value in report.items:
        if isinstance(value, tuple):
            lines.append(f"{key}:")
            lines.extend(value)
        else:
            lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def parse_machine(text: str) -> Report:
    lines = text.splitlines()
    if not lines or " = " not in lines[0]:
        raise ValueError("machine report must start with a command line")
    head_key, _, command = lines[0].partition(" = ")
    if head_key != "command":
        raise ValueError("machine report must start with 'command = ...'")
    items: list[tuple[str, object]] = []
    i = 1
    while i < len(lines):
        line = lines[i]
        if line.endswith(":") and " = " not in line:
            key = line[:-1]
            rows = []
            i += 1
            while i < len(lines) and " = " not in lines[i] and not lines[i].endswith(":"):
                rows.append(lines[i])
                i += 1
            items.append((key, tuple(rows)))
        else:
            key, sep, value = line.partition(" = ")
            if not sep:
                raise ValueError(f"cannot parse machine report line: {line!r}")
            items.append((key, value))
            i += 1
    return Report(command=command, items=tuple(items))


def render_human(report: Report) -> str:
    lines = [f"xmlift report: {report.command}", "=" * (15 + len(report.command))]
    for key, value in report.items:
        if isinstance(value, tuple):
            lines.append(f"{key}:")
            lines.extend(f"    {row}" for row in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"
