"""Irreducible representations of the reflection groups, with exact
orthogonal matrices, characters, isotypic projectors, and coupling twists.

Every irreducible here is realized with an orthonormal basis for its
invariant pairing, so the pairing is the plain dot product and the
distinguished cyclic vector is the first basis vector.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvariantViolation
from .scalars import QuadExt, Rat, rat
from .rootsystem import RootSystem, build_root_system


class Irrep:
    """An irreducible representation given by one matrix per group element."""

    def __init__(self, rs: RootSystem, label: str, matrices):
        self.rs = rs
        self.label = label
        self.matrices = matrices
        self.dim = len(matrices[0])
        self.character = [_trace(m) for m in matrices]
        self.refl_char = []
        for orbit in (0, 1):
            idxs = rs.orbit_positive(orbit)
            if idxs:
                w = rs.reflection_element[idxs[0]]
                self.refl_char.append(self.character[w])
            else:
                self.refl_char.append(QuadExt(0))

    def matrix(self, w: int):
        return self.matrices[w]

    def value(self, w: int):
        """Scalar value of a one-dimensional representation."""
        if self.dim != 1:
            raise ValueError(f"{self.label} is not one-dimensional")
        return self.matrices[w][0][0]

    def __repr__(self):
        return f"Irrep({self.rs.label}:{self.label}, dim {self.dim})"


def _trace(m):
    acc = QuadExt(0)
    for i in range(len(m)):
        acc = acc + m[i][i]
    return acc


def _scalar_rep(rs, values):
    return [((QuadExt.coerce(v),),) for v in values]


def _one_dim(rs: RootSystem, orbit_values) -> list:
    """Extend generator signs (per root orbit) along the group's build order."""
    vals = [None] * len(rs.elements)
    vals[0] = rat(1)
    for i in range(1, len(rs.elements)):
        p, gi = rs.parent[i]
        orb = rs.orbit_of[rs.simple[gi]]
        vals[i] = vals[p] * orbit_values[orb]
    return vals


def _tensor_scalar(matrices, values):
    return [tuple(tuple(c * v for c in row) for row in m)
            for m, v in zip(matrices, values)]


@lru_cache(maxsize=None)
def irreps_for(label: str) -> tuple:
    return tuple(_build_irreps(build_root_system(label)))


def irreps(rs: RootSystem) -> tuple:
    return irreps_for(rs.label)


def get_irrep(rs: RootSystem, label: str) -> Irrep:
    for rep in irreps(rs):
        if rep.label == label:
            return rep
    known = ", ".join(r.label for r in irreps(rs))
    raise ValueError(f"unknown character {label!r} for {rs.label} (one of: {known})")


def _build_irreps(rs: RootSystem):
    triv = Irrep(rs, "triv", _scalar_rep(rs, [1] * len(rs.elements)))
    sgn = Irrep(rs, "sgn", _scalar_rep(rs, _one_dim(rs, (rat(-1), rat(-1)))))
    out = [triv, sgn]
    if rs.label == "A1":
        pass
    elif rs.label == "A2":
        out.append(Irrep(rs, "std", list(rs.elements)))
    elif rs.label == "B2":
        out.append(Irrep(rs, "std", list(rs.elements)))
        chi1 = _one_dim(rs, (rat(-1), rat(1)))
        out.append(Irrep(rs, "chi1", _scalar_rep(rs, chi1)))
        chi2 = [a * b for a, b in zip(chi1, _one_dim(rs, (rat(-1), rat(-1))))]
        out.append(Irrep(rs, "chi2", _scalar_rep(rs, chi2)))
    else:  # G2
        tau = _one_dim(rs, (rat(1), rat(-1)))
        sgn_tau = [a * b for a, b in zip(tau, _one_dim(rs, (rat(-1), rat(-1))))]
        out.append(Irrep(rs, "tau", _scalar_rep(rs, tau)))
        out.append(Irrep(rs, "sgn_tau", _scalar_rep(rs, sgn_tau)))
        out.append(Irrep(rs, "std", list(rs.elements)))
        out.append(Irrep(rs, "std_tau",
                         _tensor_scalar(rs.elements, [QuadExt.coerce(v) for v in tau])))
    _validate(rs, out)
    return out


def _validate(rs, reps):
    order = len(rs.elements)
    if sum(r.dim * r.dim for r in reps) != order:
        raise InvariantViolation("squared dimensions do not sum to the group order")
    for r in reps:
        for i in range(order):
            for j in range(order):
                prod = _mat_mul_small(r.matrices[i], r.matrices[j])
                if prod != r.matrices[rs.mult[i][j]]:
                    raise InvariantViolation(f"{r.label} is not a homomorphism")
        for m in r.matrices:
            mt = tuple(zip(*m))
            if _mat_mul_small(mt, m) != _identity(r.dim):
                raise InvariantViolation(f"{r.label} matrices are not orthogonal")
    chars = [tuple(r.character) for r in reps]
    if len(set(chars)) != len(chars):
        raise InvariantViolation("duplicate characters")


def _identity(n):
    return tuple(tuple(QuadExt(1 if i == j else 0) for j in range(n)) for i in range(n))


def _mat_mul_small(a, b):
    n = len(a)
    m = len(b[0])
    return tuple(
        tuple(sum((a[i][l] * b[l][j] for l in range(len(b))), QuadExt(0))
              for j in range(m))
        for i in range(n)
    )


def tensor_one_dim(rs: RootSystem, chi: Irrep, tau: Irrep) -> Irrep:
    """The irreducible with character chi * tau (tau one-dimensional)."""
    if tau.dim != 1:
        raise ValueError("twisting character must be one-dimensional")
    target = [c * tau.character[w] for w, c in enumerate(chi.character)]
    for rep in irreps(rs):
        if rep.character == target:
            return rep
    raise InvariantViolation("twisted character is not in the table")


def twist_couplings(rs: RootSystem, tau: Irrep, k1, k2):
    """Per-orbit coupling twist (k1, k2) -> (tau(r1)*k1, tau(r2)*k2)."""
    if tau.dim != 1:
        raise ValueError("twisting character must be one-dimensional")
    t1 = tau.refl_char[0].rational()
    t2 = tau.refl_char[1].rational() if rs.orbit_counts[1] else rat(1)
    return (k1 * t1, k2 * t2)


def isotypic_projector(rs: RootSystem, chi: Irrep, action):
    """Projector onto the chi-isotypic part of a module.

    action: one matrix per group element, aligned with rs.elements.  A
    homomorphism spot-check guards against mis-ordered input.
    """
    order = len(rs.elements)
    if len(action) != order:
        raise ValueError("action must have one matrix per group element")
    for i, j in ((1, 1), (1, order - 1), (order - 1, 2 % order)):
        if _mat_mul_small(_tupled(action[i]), _tupled(action[j])) != _tupled(
                action[rs.mult[i][j]]):
            raise ValueError("not a representation")
    n = len(action[0])
    scale = Rat(int(chi.dim), order)
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = None
            for w in range(order):
                ch = chi.character[rs.inverse[w]]
                if not ch:
                    continue
                v = ch * action[w][r][c]
                acc = v if acc is None else acc + v
            row.append(acc * scale if acc is not None else QuadExt(0))
        rows.append(row)
    return rows


def _tupled(m):
    return tuple(tuple(row) for row in m)
