#!/usr/bin/env python3
# Around a generic space, the sorted-distance map is an isometry into l-infinity

from ghspace import delta, is_generic, local_isometry_check, nu, nu_inverse, sample_generic
from ghspace.nu import isometry_radius
from ghspace import gh_distance_exact, linf_distance

X = sample_generic(4, seed=11)
print([str(v) for v in X.distances()], "generic:", is_generic(X))
print("delta", delta(X).value, "radius", isometry_radius(X))

z = nu(X)
print([str(v) for v in z.coords])   # half-distances, sorted
print(z.pair_order)

# push one coordinate a bit and pull the vector back to a space
w = list(z.coords)
w[0] += isometry_radius(X) / 2
Y = nu_inverse(w, X)
print(gh_distance_exact(X, Y).distance, linf_distance(z, nu(Y)))

# many grid samples in the ball, all checked exactly
report = local_isometry_check(X, sample_count=25, seed=3)
print("all passed:", report.all_passed, len(report.samples), "samples")
