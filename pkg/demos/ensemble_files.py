"""Defining ensembles in files and streaming them through the toolkit.

The on-disk format is one JSON document per ensemble with explicit [re, im]
amplitude pairs; floats carry 17 significant digits so a round trip is
bit-exact. Anything the library (or the gramq CLI) accepts by canonical name
it also accepts as such a file.
"""

import pathlib
import tempfile

import numpy as np

from gramq import (
    AlphaZ,
    Ensemble,
    InvariantViolation,
    PureState,
    gram,
    parse_ensemble,
    q_l1,
    quantumness,
    serialize_ensemble,
)

# a lopsided three-state qutrit ensemble, not one of the canonical six
amps = [
    [1.0, 0.0, 0.0],
    [0.0, 1 / np.sqrt(2), 1 / np.sqrt(2)],
    [1 / np.sqrt(3), 1 / np.sqrt(3), 1j / np.sqrt(3)],
]
custom = Ensemble(
    [(0.5, PureState(amps[0])), (0.3, PureState(amps[1])), (0.2, PureState(amps[2]))],
    label="lopsided qutrit",
)

blob = serialize_ensemble(custom)
print("serialized form:")
print(blob.decode())

again = parse_ensemble(blob)
print("round trip is exact:", again == custom)
print("Gram matrices identical:",
      np.array_equal(gram(again).matrix, gram(custom).matrix))

path = pathlib.Path(tempfile.mkdtemp()) / "lopsided.json"
path.write_bytes(blob)
print(f"\nwrote {path}; evaluate it like any named ensemble:")
print(f"  Q_l1        = {q_l1(again):.6f}")
print(f"  Q_(0.5, 1)  = {quantumness(again, AlphaZ(0.5)):.6f}")
print(f"  Q_(2.0, 1)  = {quantumness(again, AlphaZ(2.0)):.6f}")
print(f"(the CLI equivalent: gramq eval {path} --quantifier qaz --alpha 0.5)")

print("\nvalidation failures carry the offending member:")
broken = blob.decode().replace('"p": 0.2', '"p": 0.1')
try:
    parse_ensemble(broken)
except InvariantViolation as exc:
    print(f"  InvariantViolation: {exc}")
