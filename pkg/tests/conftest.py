"""Shared oracles that avoid the Singer indexing entirely."""

import itertools

import pytest

from singer_ldpc.galois import field_create, prime_power


class CoordinateGeometry:
    """PG(n-1, q) on normalised coordinate vectors, using only GF(q) arithmetic."""

    def __init__(self, n, q):
        p, e = prime_power(q)
        self.f = field_create(p, e)
        self.n, self.q = n, q

    def normalise(self, v):
        f = self.f
        lead = next(c for c in v if c)
        s = f.inv(lead)
        return tuple(f.mul(s, c) for c in v)

    def points(self):
        out = []
        for v in itertools.product(range(self.q), repeat=self.n):
            if any(v) and self.normalise(v) == v:
                out.append(v)
        return out

    def combine(self, lam, x, mu, y):
        f = self.f
        return tuple(f.add(f.mul(lam, a), f.mul(mu, b)) for a, b in zip(x, y))

    def line(self, x, y):
        pts = set()
        for lam in range(self.q):
            for mu in range(self.q):
                if lam or mu:
                    pts.add(self.normalise(self.combine(lam, x, mu, y)))
        return frozenset(pts)

    def lines(self):
        pts = self.points()
        found = set()
        for a, b in itertools.combinations(pts, 2):
            found.add(self.line(a, b))
        return found


@pytest.fixture(scope="session")
def coord_geometry():
    cache = {}

    def get(n, q):
        if (n, q) not in cache:
            cache[n, q] = CoordinateGeometry(n, q)
        return cache[n, q]

    return get
