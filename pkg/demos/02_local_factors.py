"""From Hodge numbers to Gamma factors.

Each weight w contributes a product of GR/GC factors fixed by the Hodge
numbers (and over R by the conjugation split of the middle piece).  The
completed factor of the whole variety takes weight w with exponent
(-1)^(w+1), so even weights end up inverted.

Conventions: GR(z) = pi^(-z/2) Gamma(z/2), GC(z) = (2pi)^(-z) Gamma(z).
"""

from archfactor import (PRESET_NAMES, completed_alternating_product,
                        evaluate_log, preset, render, serre_factor)

for name in PRESET_NAMES:
    data = preset(name)
    print(f"{name} ({data.place.value} place):")
    for piece in data.weights:
        print(f"  w={piece.w}:  {render(serre_factor(piece, data.place))}")
    print(f"  completed: {render(completed_alternating_product(data))}")
    print()

# the classical zeta factor of the projective line over R is
# GR(s) GR(s-1); its completed alternating product inverts it
p1 = preset("P1_R")
product = completed_alternating_product(p1)
log_val, sign = evaluate_log(product, 3.0)
print(f"P1_R completed factor at s=3: sign {sign}, log|value| = {log_val:.6f}")

# genus shows up as the exponent of GC(s) in weight 1
e = preset("elliptic_C")
print(f"elliptic_C weight 1: {render(serre_factor(e.piece(1), e.place))}"
      f"   (one GC per Hodge column at a complex place)")
