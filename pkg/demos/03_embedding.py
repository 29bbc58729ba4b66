#!/usr/bin/env python3
# Map an n-point space isometrically into the space of k-point spaces

from ghspace import embed, least_k, validate_metric, verify_embedding

X = validate_metric(None, [
    [0, 2, 3, 4, 3],
    [2, 0, 4, 5, 4],
    [3, 4, 0, 6, 5],
    [4, 5, 6, 0, 2],
    [3, 4, 5, 2, 0],
])
print("n =", X.n, "k =", least_k(X.n))

res = embed(X)
print("anchor:", [int(v) for v in res.anchor.space.distances()])
for i, Y in enumerate(res.images):
    print(i, [str(v) for v in Y.distances()])

# every pair of images sits at the original distance
report = verify_embedding(X, res)
for p in report.pairs:
    print(p.i, p.j, p.expected, p.computed)
print("passed:", report.passed)
