"""Independent brute-force oracles.

Everything here is written directly from the definitions with plain Python
loops over dicts and sets, sharing no code with the package's numpy paths.
Tests compare the package against these before trusting any frozen value.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


def binary_semigroup_count(n: int) -> int:
    """Number of associative binary tables on n labelled points, by trying every table."""
    count = 0
    cells = list(itertools.product(range(n), repeat=2))
    for values in itertools.product(range(n), repeat=n * n):
        t = dict(zip(cells, values))
        if all(t[t[x, y], z] == t[x, t[y, z]] for x in range(n) for y in range(n) for z in range(n)):
            count += 1
    return count


def gamma_semigroup_count(s: int, g: int) -> int:
    """Associative ternary tables of shape (s, g, s), by trying every table."""
    count = 0
    cells = list(itertools.product(range(s), range(g), range(s)))
    for values in itertools.product(range(s), repeat=len(cells)):
        t = dict(zip(cells, values))
        if is_associative(t, s, g):
            count += 1
    return count


def is_associative(t: dict, s: int, g: int) -> bool:
    return all(t[t[x, a, y], b, z] == t[x, a, t[y, b, z]]
               for x in range(s) for y in range(s) for z in range(s) for a in range(g) for b in range(g))


def table_dict(S) -> dict:
    return {(x, a, y): int(S.table[x, a, y])
            for x in range(S.s_size) for a in range(S.g_size) for y in range(S.s_size)}


class NaiveOps:
    """L and R built from the definition of rho with sets of pairs."""

    def __init__(self, S):
        self.s, self.g = S.s_size, S.g_size
        self.t = t = table_dict(S)
        s, g = self.s, self.g
        left_pairs = [(x, a) for x in range(s) for a in range(g)]
        right_pairs = [(a, x) for a in range(g) for x in range(s)]

        def left_related(p, q):
            return all(t[p[0], p[1], z] == t[q[0], q[1], z] for z in range(s))

        def right_related(p, q):
            return all(t[z, p[0], p[1]] == t[z, q[0], q[1]] for z in range(s))

        self.L = self._classes(left_pairs, left_related)
        self.R = self._classes(right_pairs, right_related)
        self.l_of = {p: k for k, c in enumerate(self.L) for p in c}
        self.r_of = {p: k for k, c in enumerate(self.R) for p in c}
        self.l_mul = {(i, j): self.l_of[t[min(self.L[i])[0], min(self.L[i])[1], min(self.L[j])[0]], min(self.L[j])[1]]
                      for i in range(len(self.L)) for j in range(len(self.L))}
        self.r_mul = {(i, j): self.r_of[min(self.R[i])[0], t[min(self.R[i])[1], min(self.R[j])[0], min(self.R[j])[1]]]
                      for i in range(len(self.R)) for j in range(len(self.R))}

    @staticmethod
    def _classes(pairs, related):
        classes = []
        for p in sorted(pairs):
            for c in classes:
                if related(p, min(c)):
                    c.add(p)
                    break
            else:
                classes.append({p})
        return [frozenset(c) for c in classes]

    # transfer maps, straight from the inf/sup formulas
    def star(self, mu, nu):
        out_mu = [min(mu[self.r_of[a, x]] for a in range(self.g)) for x in range(self.s)]
        out_nu = [max(nu[self.r_of[a, x]] for a in range(self.g)) for x in range(self.s)]
        return out_mu, out_nu

    def plus(self, mu, nu):
        out_mu = [min(mu[self.l_of[x, a]] for a in range(self.g)) for x in range(self.s)]
        out_nu = [max(nu[self.l_of[x, a]] for a in range(self.g)) for x in range(self.s)]
        return out_mu, out_nu

    def star_prime(self, mu, nu):
        t = self.t
        reps = [min(c) for c in self.R]
        return ([min(mu[t[z, a, x]] for z in range(self.s)) for a, x in reps],
                [max(nu[t[z, a, x]] for z in range(self.s)) for a, x in reps])

    def plus_prime(self, mu, nu):
        t = self.t
        reps = [min(c) for c in self.L]
        return ([min(mu[t[x, a, z]] for z in range(self.s)) for x, a in reps],
                [max(nu[t[x, a, z]] for z in range(self.s)) for x, a in reps])


# ---------------------------------------------------------------------------
# classification on S (Gamma-set prime) and on a binary semigroup (R^1 prime)

def s_products(t, s, g):
    return [(x, a, y, t[x, a, y]) for x in range(s) for a in range(g) for y in range(s)]


def crisp_flags_s(P: set, t, s, g) -> dict:
    left = all(z in P for x, a, y, z in s_products(t, s, g) if y in P)
    right = all(z in P for x, a, y, z in s_products(t, s, g) if x in P)
    ideal = left and right
    prime = ideal and all(x in P or y in P for x in range(s) for y in range(s)
                          if all(t[x, a, y] in P for a in range(g)))
    semi = ideal and all(x in P for x in range(s) if all(t[x, a, x] in P for a in range(g)))
    return {"left_ideal": left, "right_ideal": right, "ideal": ideal, "prime": prime, "semiprime": semi}


def crisp_flags_binary(P: set, mul: dict, n: int) -> dict:
    left = all(mul[x, y] in P for x in range(n) for y in P)
    right = all(mul[y, x] in P for x in range(n) for y in P)
    ideal = left and right

    def inside(a, b):   # a R^1 b within P
        return mul[a, b] in P and all(mul[mul[a, r], b] in P for r in range(n))
    prime = ideal and all(a in P or b in P for a in range(n) for b in range(n) if inside(a, b))
    semi = ideal and all(a in P for a in range(n) if inside(a, a))
    return {"left_ideal": left, "right_ideal": right, "ideal": ideal, "prime": prime, "semiprime": semi}


def fuzzy_flags_s(mu, nu, t, s, g) -> dict:
    prods = s_products(t, s, g)
    ifli = all(mu[z] >= mu[y] and nu[z] <= nu[y] for x, a, y, z in prods)
    ifri = all(mu[z] >= mu[x] and nu[z] <= nu[x] for x, a, y, z in prods)
    ifi = ifli and ifri
    ifpi = ifi and all(min(mu[t[x, a, y]] for a in range(g)) == max(mu[x], mu[y])
                       and max(nu[t[x, a, y]] for a in range(g)) == min(nu[x], nu[y])
                       for x in range(s) for y in range(s))
    ifspi = ifi and _levels_semiprime(mu, nu, s, lambda X: crisp_flags_s(X, t, s, g)["semiprime"])
    return {"ifli": ifli, "ifri": ifri, "ifi": ifi, "ifpi": ifpi, "ifspi": ifspi}


def fuzzy_flags_binary(mu, nu, mul, n) -> dict:
    ifli = all(mu[mul[x, y]] >= mu[y] and nu[mul[x, y]] <= nu[y] for x in range(n) for y in range(n))
    ifri = all(mu[mul[x, y]] >= mu[x] and nu[mul[x, y]] <= nu[x] for x in range(n) for y in range(n))
    ifi = ifli and ifri

    def middles(a, b):
        return [mul[a, b]] + [mul[mul[a, r], b] for r in range(n)]
    ifpi = ifi and all(min(mu[z] for z in middles(a, b)) == max(mu[a], mu[b])
                       and max(nu[z] for z in middles(a, b)) == min(nu[a], nu[b])
                       for a in range(n) for b in range(n))
    ifspi = ifi and _levels_semiprime(mu, nu, n, lambda X: crisp_flags_binary(X, mul, n)["semiprime"])
    return {"ifli": ifli, "ifri": ifri, "ifi": ifi, "ifpi": ifpi, "ifspi": ifspi}


def _levels_semiprime(mu, nu, n, semiprime) -> bool:
    for level in set(mu) | set(nu) | {Fraction(0), Fraction(1)}:
        U = {x for x in range(n) if mu[x] >= level}
        L = {x for x in range(n) if nu[x] <= level}
        for X in (U, L):
            if X and not semiprime(X):
                return False
    return True


def extension_s(mu, nu, t, s, g, x):
    return ([min(mu[t[x, a, y]] for a in range(g)) for y in range(s)],
            [max(nu[t[x, a, y]] for a in range(g)) for y in range(s)])


def subsets(n: int):
    for k in range(n + 1):
        for c in itertools.combinations(range(n), k):
            yield set(c)


def grade_vectors(n: int, lattice):
    pairs = [(Fraction(m), Fraction(v)) for m in lattice for v in lattice if Fraction(m) + Fraction(v) <= 1]
    for combo in itertools.product(pairs, repeat=n):
        yield [p[0] for p in combo], [p[1] for p in combo]
