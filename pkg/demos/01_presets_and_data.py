"""Build, validate and combine Hodge-numeric inputs.

Every computation in the package starts from a HodgeData value: the
Hodge numbers of a smooth projective variety at one archimedean place,
plus, over R, the conjugation split of each middle Hodge piece.
"""

import json

from archfactor import (PRESET_NAMES, HodgeData, Place, WeightPiece, betti,
                        betti_eigen, direct_sum, from_json_dict, preset,
                        to_json_dict, validate)

print("built-in presets:")
for name in PRESET_NAMES:
    data = preset(name)
    shape = ", ".join(f"b_{p.w}={p.total()}" for p in data.weights)
    print(f"  {name:12s} dim {data.dim} over {data.place.value:7s} {shape}")

# hand-made input: a genus-2 curve over R
genus2 = HodgeData(
    "genus2_R", 1, Place.REAL,
    (WeightPiece(0, {(0, 0): 1}, middle_split=(1, 0)),
     WeightPiece(1, {(1, 0): 2, (0, 1): 2}),
     WeightPiece(2, {(1, 1): 1}, middle_split=(1, 0))))
print("\nvalidate(genus2_R):", validate(genus2) or "ok")

# the conjugation eigenspaces always add up to the Betti number
for w in (0, 1, 2):
    plus, minus = betti_eigen(genus2, w, 1), betti_eigen(genus2, w, -1)
    print(f"  weight {w}: b={betti(genus2, w)} splits as {plus} + {minus}")

# direct sums add tables weight by weight, splits included
both = direct_sum(genus2, preset("elliptic_R"))
print("\ndirect sum with elliptic_R:")
for piece in both.weights:
    print(f"  w={piece.w}: {dict(piece.hpq)} split={piece.middle_split}")

# JSON round trip: the same schema the CLI consumes
doc = json.dumps(to_json_dict(genus2), indent=2)
assert from_json_dict(json.loads(doc)) == genus2
print("\nJSON document for genus2_R:")
print(doc)
