"""
Spectra and spectral indices of small graphs
============================================

Every graph here is simple, undirected and connected.  Its adjacency
spectrum is real, the largest eigenvalue is positive, and once the graph
has at least one edge the smallest is negative.  Three derived quantities
summarise the spectrum around zero:

* gap   : smallest positive eigenvalue minus largest negative one
* ind   : the larger absolute value of those two frontier eigenvalues
* power : sum of absolute values over the whole spectrum
"""

import numpy as np

from specgap import (
    complete, cycle, path, star, from_edges,
    spectrum, compute_indices, nullity,
)

np.set_printoptions(precision=6, suppress=True)


def describe(name, g):
    vals = spectrum(g)
    idx = compute_indices(vals)
    print(f"{name}  (order {g.order}, {g.edge_count} edges)")
    print(f"  spectrum       {vals}")
    print(f"  zero eigenvalues {nullity(vals)}")
    print(f"  lambda_plus    {idx.lambda_plus: .6f}   lambda_minus {idx.lambda_minus: .6f}")
    print(f"  gap {idx.gap:.6f}   ind {idx.ind:.6f}   power {idx.power:.6f}")
    print()


# the four classical families
describe("path P5", path(5))
describe("cycle C6", cycle(6))
describe("star S6", star(6))
describe("complete K5", complete(5))

# a graph with no special structure at all
g = from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
describe("two triangles joined by an edge", g)

# K5 shows the extremes: its gap m and power 2(m-1) are the largest
# possible at its order, and the path's frontier eigenvalues are the
# closest to zero among these examples
