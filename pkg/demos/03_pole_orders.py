"""Pole orders two ways: Gamma bookkeeping vs a dimension formula.

The order of the pole of the weight-w factor at an integer s = m can be
read off the shifted Gamma factors, or computed as the real dimension
of a cohomology group determined by the Hodge numbers and the twist
r = w + 1 - m alone.  The two routes agree integer by integer; that
equality is the backbone of the package's verification suite.
"""

from archfactor import (OutOfRegimeError, deligne_dim, order_at, pole_order,
                        preset, serre_factor)

data = preset("elliptic_R")

print("elliptic_R pole orders by weight (rows) and location m (columns):")
cols = list(range(1, -7, -1))
print("        " + "".join(f"m={m:<4d}" for m in cols))
for w in (0, 1, 2):
    row = [pole_order(data, w, m) for m in cols]
    print(f"  w={w}:  " + "".join(f"{o:<6d}" for o in row))

print("\nagreement with the Gamma-side divisor, weight 1:")
factor = serre_factor(data.piece(1), data.place)
for m in range(0, -7, -1):
    lhs = -order_at(factor, m)
    rhs = pole_order(data, 1, m)
    print(f"  m={m:3d}: Gamma route {lhs}, dimension route {rhs}")

# far to the left the orders depend only on the parity of the twist
print("\nstabilization at m << 0 (weight 2):")
for m in (-1, -2, -3, -4, -5, -6):
    r = 2 + 1 - m
    print(f"  m={m:3d} (r={r}): order {pole_order(data, 2, m)}")

# the formula refuses to answer outside its regime
try:
    deligne_dim(data, 2, 1)
except OutOfRegimeError as exc:
    print(f"\nout of regime, as it should be: {exc}")
