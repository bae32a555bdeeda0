"""Render spacetime diagrams of observable evolution.

Each row is one time step (time runs downward), each column one site,
and the letters record which Pauli acts there. The glider draws a
diagonal stripe; the fractal rule draws a self-similar triangle. The
same diagram can be emitted as ASCII text or as a binary PPM image.
"""

from pathlib import Path

from cqcalab import build_diagram, emit, fractal, glider, parse_observable

d = build_diagram(glider(), parse_observable("ZYX@-1"), 8)
print("glider, 8 steps:")
print(emit(d, "ascii").decode())

d = build_diagram(fractal(), parse_observable("Z@0"), 32)
print("fractal rule from a single Z, 32 steps:")
print(emit(d, "ascii").decode())

target = Path(__file__).with_name("fractal_128.ppm")
d = build_diagram(fractal(), parse_observable("Z@0"), 128)
target.write_bytes(emit(d, "ppm"))
print(f"wrote {d.width}x{d.height} image to {target}")
