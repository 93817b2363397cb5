"""Text formats for sets, colourings and traces."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from .core import Colouring, InvalidInput, SortedSeq, TraceStep


def format_set(A: Sequence[int]) -> str:
    return "".join(f"{a}\n" for a in A)


def parse_set(text: str) -> SortedSeq:
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    try:
        values = [int(line.strip()) for line in lines]
    except ValueError as exc:
        raise InvalidInput(f"set file: {exc}") from None
    return SortedSeq(values)


def format_colouring(c: Colouring) -> str:
    return f"{c.N} {c.r}\n" + "".join(f"{x}\n" for x in c.colours.tolist())


def parse_colouring(text: str) -> Colouring:
    lines = [line.strip() for line in text.split("\n")]
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise InvalidInput("colouring file is empty")
    try:
        N, r = (int(x) for x in lines[0].split())
        colours = [int(x) for x in lines[1:]]
    except ValueError as exc:
        raise InvalidInput(f"colouring file: {exc}") from None
    return Colouring(N, r, colours)


def format_trace(trace: Iterable[TraceStep]) -> str:
    return json.dumps([step.to_json() for step in trace], indent=1) + "\n"


def parse_trace(text: str) -> list[TraceStep]:
    return [TraceStep(item["kind"], item["params"]) for item in json.loads(text)]


def read_set(path) -> SortedSeq:
    return parse_set(Path(path).read_text(encoding="utf-8"))


def write_set(path, A: Sequence[int]):
    Path(path).write_bytes(format_set(A).encode("utf-8"))


def read_colouring(path) -> Colouring:
    return parse_colouring(Path(path).read_text(encoding="utf-8"))


def write_colouring(path, c: Colouring):
    Path(path).write_bytes(format_colouring(c).encode("utf-8"))


def write_trace(path, trace: Iterable[TraceStep]):
    Path(path).write_bytes(format_trace(trace).encode("utf-8"))
