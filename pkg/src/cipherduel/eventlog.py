"""Append-only round event log: one JSON record per line, replayable to
bit-identical contest state."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Iterator

from .contest import Contest


class EventLog:
    """Appends are atomic per event (single write + flush of one line)."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._fh = open(self.path, "a", encoding="utf-8")

    def append(self, event: dict) -> None:
        line = json.dumps(event, sort_keys=True, separators=(",", ":"))
        self._fh.write(line + "\n")
        self._fh.flush()
        os.fsync(self._fh.fileno())

    def close(self) -> None:
        self._fh.close()


def read_events(path: str | Path) -> Iterator[dict]:
    path = Path(path)
    if not path.exists():
        return
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield json.loads(line)


def replay_file(path: str | Path, **kwargs) -> Contest:
    """Rebuild a Contest from a log file (e.g. after a crash/restart)."""
    return Contest.replay(read_events(path), **kwargs)
