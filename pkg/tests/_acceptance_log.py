"""Shared registry for acceptance criterion outcomes (printed at session end)."""

LINES = []


def record(num: int, ok: bool, desc: str) -> None:
    LINES.append(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {desc}")
