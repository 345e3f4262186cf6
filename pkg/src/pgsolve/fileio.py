"""PGSolver-style game files, extended with incomplete-vertex markers.

Grammar (one statement per line, each terminated by ';'):

    parity <max-id>;
    semantics <min|max>;          -- optional, default min
    incomplete <id>[,<id>]*;      -- optional, default none
    <id> <priority> <owner> <succ>[,<succ>]* ["<label>"];

Owner 0 is Even, 1 is Odd; a sink's successor field is '-'.  Priorities
are stored min-semantics internally: max-semantics files are converted by
the parity-preserving shift p' = K - p with K the smallest even upper
bound of the file's priorities.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from .game import Game, IncompleteGame, Solution
from .sets import VertexSet


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass
class LoadedGame:
    """Parsed game plus the file's original vertex ids (sparse files are
    compacted to dense ids in ascending order)."""

    game: IncompleteGame
    original_ids: np.ndarray

    def compact_id(self, original: int) -> int:
        hits = np.flatnonzero(self.original_ids == original)
        if not hits.size:
            raise KeyError(f"vertex id {original} not in file")
        return int(hits[0])


_RECORD = re.compile(
    r"^(?P<id>\d+)\s+(?P<prio>\d+)\s+(?P<owner>[01])\s+"
    r"(?P<succ>-|\d+(?:\s*,\s*\d+)*)(?:\s+\"(?P<label>[^\"]*)\")?$")


def loads(text: str) -> LoadedGame:
    max_id: Optional[int] = None
    semantics = "min"
    incomplete_raw: List[int] = []
    records: Dict[int, tuple] = {}
    saw_record = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if not line.endswith(";"):
            raise ParseError("statement must end with ';'", lineno)
        line = line[:-1].strip()
        head = line.split(None, 1)[0] if line else ""
        if max_id is None:
            if head != "parity":
                raise ParseError("file must start with 'parity <max-id>;'",
                                 lineno)
            try:
                max_id = int(line.split(None, 1)[1])
            except (IndexError, ValueError):
                raise ParseError("malformed parity header", lineno)
            if max_id < 0:
                raise ParseError("max-id must be non-negative", lineno)
            continue
        if head == "semantics":
            if saw_record:
                raise ParseError("semantics line must precede records", lineno)
            value = line.split(None, 1)[1].strip() if " " in line else ""
            if value not in ("min", "max"):
                raise ParseError(f"unknown semantics {value!r}", lineno)
            semantics = value
            continue
        if head == "incomplete":
            if saw_record:
                raise ParseError("incomplete line must precede records", lineno)
            try:
                incomplete_raw = [int(t) for t in
                                  line.split(None, 1)[1].replace(" ", "").split(",")]
            except (IndexError, ValueError):
                raise ParseError("malformed incomplete line", lineno)
            continue
        m = _RECORD.match(line)
        if not m:
            raise ParseError(f"malformed vertex record: {raw.strip()!r}", lineno)
        saw_record = True
        vid = int(m.group("id"))
        if vid > max_id:
            raise ParseError(f"vertex id {vid} exceeds declared max {max_id}",
                             lineno)
        if vid in records:
            raise ParseError(f"duplicate vertex record for id {vid}", lineno)
        if m.group("succ") == "-":
            succ: List[int] = []
        else:
            succ = [int(t) for t in m.group("succ").replace(" ", "").split(",")]
            for w in succ:
                if w > max_id:
                    raise ParseError(
                        f"successor id {w} exceeds declared max {max_id}", lineno)
        records[vid] = (int(m.group("prio")), int(m.group("owner")), succ,
                        lineno)

    if max_id is None:
        raise ParseError("empty file: missing parity header")
    if not records:
        raise ParseError("file declares no vertex records")

    original_ids = np.asarray(sorted(records), dtype=np.int64)
    compact = {int(orig): i for i, orig in enumerate(original_ids)}
    owners, priorities, succs = [], [], []
    for orig in original_ids:
        prio, owner, succ, lineno = records[int(orig)]
        for w in succ:
            if w not in compact:
                raise ParseError(f"successor id {w} has no vertex record",
                                 lineno)
        owners.append(owner)
        priorities.append(prio)
        succs.append([compact[w] for w in succ])

    if semantics == "max":
        pmax = max(priorities)
        shift = pmax if pmax % 2 == 0 else pmax + 1
        priorities = [shift - p for p in priorities]

    inc_ids = []
    for orig in incomplete_raw:
        if orig not in compact:
            raise ParseError(f"incomplete id {orig} has no vertex record")
        inc_ids.append(compact[orig])

    game = Game.build(owners, priorities, succs)
    return LoadedGame(IncompleteGame(game, VertexSet.of(game.size, inc_ids)),
                      original_ids)


def load(path: str) -> LoadedGame:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def parse(path: str) -> IncompleteGame:
    """Parse a game file into the in-memory model (min semantics)."""
    return load(path).game


def serialize(g) -> str:
    """Serialize the active vertices of a game, min semantics."""
    if isinstance(g, Game):
        g = IncompleteGame.complete(g)
    game = g.game
    ids = np.flatnonzero(game.vertices)
    lines = [f"parity {int(ids.max()) if ids.size else 0};", "semantics min;"]
    inc = [str(int(v)) for v in g.incomplete.ids()]
    if inc:
        lines.append(f"incomplete {','.join(inc)};")
    for v in ids:
        succ = game.successors(int(v))
        field = ",".join(str(int(w)) for w in succ) if succ.size else "-"
        lines.append(f"{int(v)} {int(game.priority[v])} "
                     f"{int(game.owner[v])} {field};")
    return "\n".join(lines) + "\n"


def format_result(sol: Solution, g, explored: int, solver_calls: int,
                  explore_ms: float, solve_ms: float,
                  original_ids: Optional[np.ndarray] = None) -> str:
    """Per-vertex winner lines plus the run summary."""
    if isinstance(g, IncompleteGame):
        g = g.game
    lines = []
    for v in np.flatnonzero(g.vertices):
        v = int(v)
        winner = sol.winner_of(v)
        mark = "?" if winner is None else str(int(winner))
        out = v if original_ids is None else int(original_ids[v])
        entry = f"{out} {mark}"
        if v in sol.strategy:
            tgt = sol.strategy[v]
            entry += f" {tgt if original_ids is None else int(original_ids[tgt])}"
        lines.append(entry)
    lines.append(f"explored={explored} solver_calls={solver_calls} "
                 f"explore_ms={round(explore_ms)} solve_ms={round(solve_ms)}")
    return "\n".join(lines) + "\n"
