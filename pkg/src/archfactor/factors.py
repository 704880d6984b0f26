"""Archimedean local factors attached to Hodge-numeric data.

For a single weight w the factor is the classical product of shifted
Gamma functions:

  complex place
      L_w(s) = prod over ordered pairs (p, q), p+q=w, of
               GC(s - min(p,q))^h[p,q]

  real place
      L_w(s) = prod over unordered pairs p < q of GC(s - p)^h[p,q]
               * (for even w = 2p)
                 GR(s - p)^h_plus * GR(s - p + 1)^h_minus

with h_plus/h_minus the middle conjugation split carried by the input
data.  The completed product over all weights takes each factor with
exponent (-1)^(w+1), so even weights contribute inverted factors.
"""

from __future__ import annotations

from .gamma import GammaExpression, gamma_c, gamma_r, identity, multiply, power
from .hodge import HodgeData, Place, WeightPiece


def serre_factor(piece: WeightPiece, place: Place) -> GammaExpression:
    """Local factor of one weight piece at the given place."""
    place = Place(place)
    gr: dict = {}
    gc: dict = {}
    if place is Place.COMPLEX:
        for (p, q), h in piece.hpq.items():
            a = -min(p, q)
            gc[a] = gc.get(a, 0) + h
    else:
        for (p, q), h in piece.hpq.items():
            if p < q:
                gc[-p] = gc.get(-p, 0) + h
        mid = piece.middle()
        if mid:
            if piece.middle_split is None:
                raise ValueError(
                    f"weight {piece.w}: real place requires middle_split "
                    f"for nonzero middle Hodge number")
            h_plus, h_minus = piece.middle_split
            p = piece.w // 2
            if h_plus:
                gr[-p] = gr.get(-p, 0) + h_plus
            if h_minus:
                gr[-p + 1] = gr.get(-p + 1, 0) + h_minus
    return GammaExpression(gr=gr, gc=gc)


def completed_alternating_product(data: HodgeData) -> GammaExpression:
    """prod_w serre_factor(w)^((-1)^(w+1)) over all weights of the data.

    Absent weights contribute the empty product.
    """
    out = identity()
    for piece in data.weights:
        sign = 1 if piece.w % 2 else -1
        out = multiply(out, power(serre_factor(piece, data.place), sign))
    return out
