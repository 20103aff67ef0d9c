"""Brute-force reference implementation used to cross-check the library.

Elements are coordinate tuples in the library's convention (constant term
first for polynomials, factors concatenated for products). Everything is
plain Python sets and loops; nothing is shared with ``gril``.
"""

from itertools import product


class OracleRing:
    def __init__(self, elements, add, mul, one, degree_of, inverse=lambda g: 0):
        self.inverse_degree = inverse
        self.elements = list(elements)
        self.add = add
        self.mul = mul
        self.one = one
        self.zero = tuple(0 for _ in one)
        self.degree_of = degree_of
        self.units = {a for a in self.elements if any(mul(a, b) == one for b in self.elements)}
        self.components = {}
        for a in self.elements:
            for g in degree_of(a):
                self.components.setdefault(g, set()).add(a)
        for comp in self.components.values():
            comp.add(self.zero)
        self.homogeneous = set().union(*self.components.values())

    def neg(self, a):
        return next(b for b in self.elements if self.add(a, b) == self.zero)


def zmod(n):
    return OracleRing(
        [(a,) for a in range(n)],
        lambda a, b: ((a[0] + b[0]) % n,),
        lambda a, b: ((a[0] * b[0]) % n,),
        (1,),
        lambda a: {0},
    )


def zmod_product(*ns):
    def add(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, ns))

    def mul(a, b):
        return tuple((x * y) % n for x, y, n in zip(a, b, ns))

    return OracleRing(list(product(*[range(n) for n in ns])), add, mul, tuple(1 for _ in ns), lambda a: {0})


def _poly_degrees(a, deg):
    """Degrees of the nonzero monomials of a; {0} for zero."""
    ds = {deg(j) for j, c in enumerate(a) if c}
    return ds or {deg(0)}


def truncated(n, t, deg, inverse=lambda g: 0):
    """Z_n[X]/(X^t); X^j has degree deg(j)."""

    def add(a, b):
        return tuple((x + y) % n for x, y in zip(a, b))

    def mul(a, b):
        out = [0] * t
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                if i + j < t:
                    out[i + j] = (out[i + j] + x * y) % n
        return tuple(out)

    def degree_of(a):
        ds = _poly_degrees(a, deg)
        return ds if len(ds) == 1 else set()

    one = (1,) + (0,) * (t - 1)
    return OracleRing(list(product(range(n), repeat=t)), add, mul, one, degree_of, inverse)


def gaussian(n):
    """Z_n[i], i^2 = -1, graded by the parity of the power of i."""

    def add(a, b):
        return ((a[0] + b[0]) % n, (a[1] + b[1]) % n)

    def mul(a, b):
        return ((a[0] * b[0] - a[1] * b[1]) % n, (a[0] * b[1] + a[1] * b[0]) % n)

    def degree_of(a):
        if a == (0, 0):
            return {0, 1}
        if a[1] == 0:
            return {0}
        if a[0] == 0:
            return {1}
        return set()

    return OracleRing(list(product(range(n), repeat=2)), add, mul, (1, 0), degree_of, lambda g: g)


# ---------------------------------------------------------------------------
# ideals


def ideal(R, gens):
    """Smallest ideal containing gens."""
    members = {R.zero}
    frontier = [R.mul(r, g) for g in gens for r in R.elements]
    while frontier:
        x = frontier.pop()
        if x in members:
            continue
        new = {R.add(x, m) for m in members} | {x}
        frontier.extend(new - members)
        members |= {x}
    return frozenset(members)


def graded_ideals(R):
    """All graded ideals: ideals generated by sets of homogeneous elements."""
    principals = {ideal(R, [h]) for h in R.homogeneous}
    found = {frozenset({R.zero})}
    frontier = list(found)
    while frontier:
        current = frontier.pop()
        for P in principals:
            if P <= current:
                continue
            S = ideal(R, list(current | P))
            if S not in found:
                found.add(S)
                frontier.append(S)
    return found


def ideal_product(R, I, J):
    return ideal(R, [R.mul(a, b) for a in I for b in J])


def ideal_power(R, I, n):
    out = I
    for _ in range(n - 1):
        out = ideal_product(R, out, I)
    return out


def omega(R, I):
    powers = [I]
    while True:
        nxt = ideal_product(R, powers[-1], I)
        if nxt == powers[-1]:
            return nxt
        powers.append(nxt)


def phi_value(R, phi, I):
    """φ(I) ∩ I, or None for the empty set."""
    if phi == "empty":
        return None
    if phi == "zero":
        return frozenset({R.zero})
    if phi == "identity":
        return I
    if phi == "omega":
        return omega(R, I) & I
    n = int(phi.split(":")[1])
    return ideal_power(R, I, n) & I


# ---------------------------------------------------------------------------
# predicates


def phi_one_absorbing_violations(R, I, phi, g=None):
    """Every nonunit homogeneous (a, b, c) with abc ∈ I − φ(I), ab ∉ I, c ∉ I."""
    value = phi_value(R, phi, I) or frozenset()
    pool = R.homogeneous if g is None else R.components.get(g, {R.zero})
    nonunits = [a for a in pool if a not in R.units]
    out = []
    for a in nonunits:
        for b in nonunits:
            ab = R.mul(a, b)
            if ab in I:
                continue
            for c in nonunits:
                if c in I:
                    continue
                abc = R.mul(ab, c)
                if abc in I and abc not in value:
                    out.append((a, b, c))
    return out


def phi_prime_violations(R, I, phi, g=None):
    value = phi_value(R, phi, I) or frozenset()
    pool = R.homogeneous if g is None else R.components.get(g, {R.zero})
    return [
        (a, b)
        for a in pool
        for b in pool
        if a not in I and b not in I and R.mul(a, b) in I and R.mul(a, b) not in value
    ]


def is_vnr(R):
    """Every a ∈ R_g has x ∈ R_{g^-1} with a = a^2 x."""
    for g, comp in R.components.items():
        inv = R.components.get(R.inverse_degree(g), {R.zero})
        for a in comp:
            if not any(R.mul(R.mul(a, a), x) == a for x in inv):
                return False
    return True
