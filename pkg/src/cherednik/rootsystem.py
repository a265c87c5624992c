"""Rank <= 2 root systems with exact coordinates, their reflection groups,
the canonical invariant bilinear form, and invariant-ring generators.

Coordinates for the plane types use Q(sqrt(3)): equilateral angles for the
hexagonal types, integer coordinates for the hyperoctahedral one.  Vectors
in the dual space a* are coefficient tuples on the coordinate functions
x1..xn; vectors in a are tuples on the dual basis, so the natural pairing
<y, x> is the coordinate dot product.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvariantViolation
from .polynomials import MPoly, clear_content, reynolds, weyl_act
from .scalars import (HALF, PP_K1, PP_K2, ParamPoly, QONE, QuadExt, Rat,
                      SQRT3)

LABELS = ("A1", "A2", "B2", "G2")

_DEGREES = {"A1": (2,), "A2": (2, 3), "B2": (2, 4), "G2": (2, 6)}
_GROUP_ORDER = {"A1": 2, "A2": 6, "B2": 8, "G2": 12}

# lowest-weight calibration: l/2 + k1*|R1+| + k2*|R2+| must reduce to these
_EXPECTED_HBAR = {
    "A1": ParamPoly({(0, 0): HALF, (1, 0): QONE}),
    "A2": ParamPoly({(0, 0): QONE, (1, 0): QuadExt(3)}),
    "B2": ParamPoly({(0, 0): QONE, (1, 0): QuadExt(2), (0, 1): QuadExt(2)}),
    "G2": ParamPoly({(0, 0): QONE, (1, 0): QuadExt(3), (0, 1): QuadExt(3)}),
}


def _pairing(y, x):
    acc = None
    for a, b in zip(y, x):
        p = a * b
        acc = p if acc is None else acc + p
    return acc


def _mat_apply(m, v):
    return tuple(_pairing(row, v) for row in m)


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][l] * b[l][j] for l in range(n)), QuadExt(0)) for j in range(n))
        for i in range(n)
    )


def _mat_inv_transpose(m):
    n = len(m)
    if n == 1:
        return ((m[0][0].inv(),),)
    a, b, c, d = m[0][0], m[0][1], m[1][0], m[1][1]
    det = a * d - b * c
    inv = ((d / det, -b / det), (-c / det, a / det))
    return tuple(zip(*inv))


def _reflection_matrix(alpha, coroot):
    n = len(alpha)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = QuadExt(1 if i == j else 0) - alpha[i] * coroot[j]
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


class Metric:
    """The invariant form on a*: gram matrix, inverse, and the two transfers."""

    def __init__(self, gram):
        self.gram = gram
        n = len(gram)
        if n == 1:
            self.inv = ((gram[0][0].inv(),),)
        else:
            a, b, c, d = gram[0][0], gram[0][1], gram[1][0], gram[1][1]
            det = a * d - b * c
            self.inv = ((d / det, -b / det), (-c / det, a / det))

    def pair_dual(self, x, z):
        """B*(x, z) for x, z in a*-coordinates."""
        return _pairing(_mat_apply(self.gram, x), z)

    def to_a(self, x):
        """The transfer a* -> a (pairing against it recovers B*)."""
        return _mat_apply(self.gram, x)

    def to_dual(self, y):
        """Inverse transfer a -> a*."""
        return _mat_apply(self.inv, y)


class RootSystem:
    """One of the fixed rank <= 2 realizations plus derived group data."""

    def __init__(self, label):
        if label not in LABELS:
            raise ValueError(f"unknown root system type {label!r}")
        self.label = label
        self.degrees = _DEGREES[label]
        self._build_roots()
        self._build_group()
        self._build_orbits()
        self._build_metric()
        self._build_invariants()
        self._check()
        # per-degree caches shared by the operator layer
        self._quot_cache = {}
        self._subst_cache = {}
        self._sl2_checked = False

    # -- construction ---------------------------------------------------------
    def _build_roots(self):
        q = QuadExt
        h = Rat(1, 2)
        if self.label == "A1":
            self.rank = 1
            pos = [(q(1),)]
            co = [(q(2),)]
            simple = [0]
        elif self.label == "A2":
            self.rank = 2
            pos = [
                (q(1), q(0)),
                (q(-h), q(0, h)),
                (q(h), q(0, h)),
            ]
            co = [tuple(2 * c for c in a) for a in pos]
            simple = [0, 1]
        elif self.label == "B2":
            self.rank = 2
            pos = [
                (q(1), q(0)),
                (q(0), q(1)),
                (q(1), q(1)),
                (q(1), q(-1)),
            ]
            co = [
                (q(2), q(0)),
                (q(0), q(2)),
                (q(1), q(1)),
                (q(1), q(-1)),
            ]
            simple = [1, 3]
        else:  # G2
            self.rank = 2
            third = Rat(1, 3)
            pos = [
                (q(1), q(0)),
                (q(h), q(0, h)),
                (q(-h), q(0, h)),
                (q(Rat(3, 2)), q(0, h)),
                (q(0), q(0, 1)),
                (q(Rat(-3, 2)), q(0, h)),
            ]
            co = [tuple(2 * c for c in a) for a in pos[:3]]
            co += [tuple(2 * third * c for c in a) for a in pos[3:]]
            simple = [0, 5]
        self.positive_roots = pos
        self.coroots = co
        self.simple = simple

    def _build_group(self):
        gens = [
            _reflection_matrix(self.positive_roots[i], self.coroots[i])
            for i in self.simple
        ]
        ident = tuple(
            tuple(QuadExt(1 if i == j else 0) for j in range(self.rank))
            for i in range(self.rank)
        )
        elements = [ident]
        index = {ident: 0}
        parent = [None]
        cursor = 0
        while cursor < len(elements):
            base = elements[cursor]
            for gi, g in enumerate(gens):
                m = _mat_mul(base, g)
                if m not in index:
                    index[m] = len(elements)
                    elements.append(m)
                    parent.append((cursor, gi))
            cursor += 1
        self.elements = elements
        self.parent = parent
        n = len(elements)
        self.mult = [[index[_mat_mul(elements[i], elements[j])] for j in range(n)]
                     for i in range(n)]
        self.inverse = [next(j for j in range(n) if self.mult[i][j] == 0)
                        for i in range(n)]
        self.amats = [_mat_inv_transpose(m) for m in elements]
        self.reflection_element = []
        for a, c in zip(self.positive_roots, self.coroots):
            m = _reflection_matrix(a, c)
            if m not in index:
                raise InvariantViolation("reflection is not in the generated group")
            self.reflection_element.append(index[m])

    def _build_orbits(self):
        pos = self.positive_roots
        key = {}
        for i, a in enumerate(pos):
            key[a] = i
            key[tuple(-c for c in a)] = i
        adj = [set() for _ in pos]
        for i, a in enumerate(pos):
            for m in self.elements:
                img = _mat_apply(m, a)
                j = key.get(img)
                if j is None:
                    raise InvariantViolation("group does not permute the roots")
                adj[i].add(j)
        orbit_id = [-1] * len(pos)
        orbits = []
        for i in range(len(pos)):
            if orbit_id[i] >= 0:
                continue
            stack, members = [i], set()
            while stack:
                v = stack.pop()
                if v in members:
                    continue
                members.add(v)
                stack.extend(adj[v] - members)
            for v in members:
                orbit_id[v] = len(orbits)
            orbits.append(sorted(members))
        if len(orbits) > 2:
            raise InvariantViolation("more than two root orbits")
        self._orbit_groups = orbits
        self.orbit_of = orbit_id

    def _build_metric(self):
        n = self.rank
        gram = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = QuadExt(0)
                for co in self.coroots:
                    acc = acc + 2 * co[i] * co[j]  # both signs of each root
                row.append(acc)
            gram.append(tuple(row))
        self.metric = Metric(tuple(gram))
        # order the (at most two) orbits by root length, short first
        if len(self._orbit_groups) == 2:
            lens = [
                self.metric.pair_dual(self.positive_roots[g[0]],
                                      self.positive_roots[g[0]])
                for g in self._orbit_groups
            ]
            if (lens[0] - lens[1]).sign() > 0:
                self._orbit_groups.reverse()
                self.orbit_of = [1 - o for o in self.orbit_of]
        self.orbit_counts = (
            len(self._orbit_groups[0]),
            len(self._orbit_groups[1]) if len(self._orbit_groups) > 1 else 0,
        )

    def _build_invariants(self):
        n = self.rank
        ginv = self.metric.inv
        e = MPoly.zero(n)
        for i in range(n):
            for j in range(n):
                if ginv[i][j]:
                    e = e + MPoly(n, {tuple(
                        (1 if l == i else 0) + (1 if l == j else 0) for l in range(n)
                    ): HALF * ginv[i][j]})
        self.e_poly = e
        gens = [e]
        if self.label == "A2":
            q2 = None
            for i in range(n):
                cand = reynolds(self.elements, MPoly.var(i, n) ** 3)
                if cand:
                    q2 = clear_content(cand)
                    break
            gens.append(q2)
        elif self.label == "B2":
            gens.append(MPoly(2, {(2, 2): QONE}))
        elif self.label == "G2":
            gens.append(MPoly(2, {(6, 0): QuadExt(2), (4, 2): QuadExt(-30),
                                  (2, 4): QuadExt(30), (0, 6): QuadExt(-2)}))
        self.invariant_gens = gens

    # -- sanity checks run once at construction --------------------------------
    def _check(self):
        if len(self.elements) != _GROUP_ORDER[self.label]:
            raise InvariantViolation(
                f"{self.label}: group order {len(self.elements)}, "
                f"expected {_GROUP_ORDER[self.label]}")
        for a, c in zip(self.positive_roots, self.coroots):
            if _pairing(c, a) != 2:
                raise InvariantViolation("coroot pairing <a^, a> != 2")
        g = self.metric.gram
        for i in range(self.rank):
            for j in range(self.rank):
                if g[i][j] != g[j][i]:
                    raise InvariantViolation("metric is not symmetric")
        lead = g[0][0]
        if lead.sign() <= 0:
            raise InvariantViolation("metric is not positive definite")
        if self.rank == 2:
            det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
            if det.sign() <= 0:
                raise InvariantViolation("metric is not positive definite")
        for m in self.elements:
            mg = _mat_mul(tuple(zip(*m)), _mat_mul(g, m))
            if mg != g:
                raise InvariantViolation("group does not preserve the metric")
        for q in self.invariant_gens:
            for m in self.elements:
                if weyl_act(m, q) != q:
                    raise InvariantViolation("invariant generator is not invariant")
        if hbar_poly(self) != _EXPECTED_HBAR[self.label]:
            raise InvariantViolation("lowest-weight calibration mismatch")

    # -- queries ---------------------------------------------------------------
    @property
    def num_positive(self):
        return len(self.positive_roots)

    def orbit_positive(self, which: int):
        """Positive-root indices of orbit 0 (short) or 1 (long)."""
        if which >= len(self._orbit_groups):
            return []
        return list(self._orbit_groups[which])

    def coupling_of_root(self, i: int, k1, k2):
        return k1 if self.orbit_of[i] == 0 else k2

    def b_map(self, x):
        return self.metric.to_a(x)

    def b_inv(self, y):
        return self.metric.to_dual(y)

    def act_dual(self, w: int, x):
        """Action of element w on a*-coordinates."""
        return _mat_apply(self.elements[w], x)

    def act_a(self, w: int, y):
        """Action of element w on a-coordinates (inverse transpose)."""
        return _mat_apply(self.amats[w], y)


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystem:
    return RootSystem(label)


def hbar_poly(rs: RootSystem) -> ParamPoly:
    """The lowest-weight scalar for the trivial character, as a polynomial
    in the two couplings: rank/2 + k1*|R1+| + k2*|R2+|."""
    c1, c2 = rs.orbit_counts
    return (ParamPoly.const(Rat(rs.rank, 2))
            + PP_K1 * ParamPoly.const(c1) + PP_K2 * ParamPoly.const(c2))


def kappa_poly() -> ParamPoly:
    """The coupling difference k2 - k1."""
    return PP_K2 - PP_K1
