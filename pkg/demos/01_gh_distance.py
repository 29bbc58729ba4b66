#!/usr/bin/env python3
# Exact Gromov-Hausdorff distances between small metric spaces

from fractions import Fraction

from ghspace import gh_distance_exact, simplex, single_point, validate_metric
from ghspace import delta, diameter

tri = validate_metric(["a", "b", "c"], [[0, 3, 4], [3, 0, 5], [4, 5, 0]])
print("diam", diameter(tri), "delta", delta(tri).value, delta(tri).kind)

# a point sits at half the diameter from anything
print(gh_distance_exact(single_point(), tri).distance)

# segment vs triangle, with the witness correspondence
r = gh_distance_exact(simplex(2, 4), tri)
print(r.distance, r.optimal.sorted_pairs(), "nodes:", r.nodes_explored)

# scaling the space scales the distance to its own copy
half = tri.scaled(Fraction(1, 2))
print(gh_distance_exact(tri, half).distance)

# the same answer on two worker threads
print(gh_distance_exact(tri, half, workers=2).to_json(include_nodes=False))
