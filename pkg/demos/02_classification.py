"""Classify automata by the trace of their matrix.

A constant trace means the automaton acts periodically up to translation.
A trace of the form u^-n + u^n means it supports gliders with speed n.
Anything else produces self-similar fractal spacetime patterns. The demo
also shows what validation rejects and why.
"""

from cqcalab import (
    CqcaMatrix,
    CqcaValidationError,
    classify,
    fractal,
    glider,
    period,
    random_cqca,
    validate,
)

examples = [
    ("glider", glider().matrix),
    ("glider squared", (glider() @ glider()).matrix),
    ("fractal", fractal().matrix),
    ("period 3", CqcaMatrix.from_strings("0", "1", "1", "1")),
]
for name, matrix in examples:
    t = validate(matrix)
    line = f"{name:16s} trace={t.trace()!s:18s} -> {t.class_tag}"
    p = period(t, 12)
    if p is not None:
        line += f" (period {p})"
    print(line)
print()

print("random automata are built from shear words, so they always validate:")
for seed in range(5):
    t = random_cqca(seed, word_length=4, max_shear_degree=2)
    print(f"  seed {seed}: {classify(t.matrix)}")
print()

print("invalid matrices are rejected with a reason:")
bad = [
    ("singular", CqcaMatrix.from_strings("1", "1", "1", "1")),
    ("asymmetric entries", CqcaMatrix.from_strings("1", "0", "u", "1")),
    ("pure shift", CqcaMatrix.from_strings("u^2", "0", "0", "u^2")),
]
for name, matrix in bad:
    try:
        validate(matrix)
    except CqcaValidationError as err:
        print(f"  {name:20s} -> {type(err).__name__}: {err}")
