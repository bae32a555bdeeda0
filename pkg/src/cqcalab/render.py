"""Deterministic space-time diagrams of observable evolution.

Row k holds the observable after k steps; time increases downward in all
output formats (row 0 first).  The ASCII format uses '.', 'X', 'Y', 'Z';
the PPM format is binary P6 with one pixel per cell and a fixed palette,
so identical diagrams always produce identical bytes.
"""

from __future__ import annotations

import dataclasses
from typing import Literal

from .automaton import ValidatedCqca
from .phase_space import PhaseVector

_PALETTE = {
    "1": (255, 255, 255),
    "X": (255, 0, 0),
    "Y": (0, 255, 0),
    "Z": (0, 0, 255),
}


@dataclasses.dataclass(frozen=True)
class SpaceTimeDiagram:
    rows: tuple[str, ...]
    window: tuple[int, int]  # leftmost and rightmost site shown

    @property
    def width(self) -> int:
        return self.window[1] - self.window[0] + 1

    @property
    def height(self) -> int:
        return len(self.rows)


def build_diagram(
    t: ValidatedCqca, initial: PhaseVector, steps: int
) -> SpaceTimeDiagram:
    """Evolve ``initial`` for ``steps`` steps and align all rows to one window.

    The window is the union of all supports padded by one site on each
    side, so every row has the same width.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    states = [initial]
    for _ in range(steps):
        states.append(t.apply(states[-1]))
    spans = [v.support() for v in states]
    lows = [s[0] for s in spans if s is not None]
    highs = [s[1] for s in spans if s is not None]
    left = (min(lows) if lows else 0) - 1
    right = (max(highs) if highs else 0) + 1
    rows = tuple(
        "".join(v.letter_at(site) for site in range(left, right + 1)) for v in states
    )
    return SpaceTimeDiagram(rows, (left, right))


def emit(d: SpaceTimeDiagram, format: Literal["ascii", "ppm"]) -> bytes:
    """Serialize a diagram; byte-exact across platforms."""
    if format == "ascii":
        translated = (row.replace("1", ".") for row in d.rows)
        return ("\n".join(translated) + "\n").encode("ascii")
    if format == "ppm":
        header = f"P6\n{d.width} {d.height}\n255\n".encode("ascii")
        pixels = bytearray()
        for row in d.rows:
            for letter in row:
                pixels.extend(_PALETTE[letter])
        return header + bytes(pixels)
    raise ValueError(f"unknown format {format!r}")
