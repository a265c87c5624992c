"""Lowest-weight (Verma-type) standard modules, the contravariant form,
and the finite-dimensionality classification of their simple quotients.

A standard module is polynomials tensored with an irreducible of the
reflection group; Dunkl operators lower the polynomial degree.  The
contravariant form pairs degree-n layers against themselves by moving
coordinate multiplications to Dunkl operators through the metric
transfer.  The form's radical cuts out the simple quotient, so layer
ranks are the quotient's graded dimensions.

Two independent finiteness tests are run and cross-checked: vanishing
of the raised lowest-weight vector against the matching isotypic layer
(detected through composed lowering operators), and a direct scan of
the form ranks.  A disagreement raises InvariantViolation.
"""

from __future__ import annotations

from .errors import InvariantViolation
from .scalars import ParamPoly, QuadExt, Rat, is_nonneg_int, rat
from .linalg import bareiss_rank, gauss_rank, independent_columns, mat_mul
from .polynomials import monomials
from .rootsystem import RootSystem, build_root_system
from .wrep import Irrep, get_irrep, isotypic_projector
from .dunkl import (b_lowering_matrix, f_matrix, lowest_weight_scalar,
                    sl2_calibration, weyl_poly_matrix)

DEFAULT_SCAN_BOUND = 10


def _vec_mat(v, m):
    """Row vector times matrix."""
    out = []
    for c in range(len(m[0])):
        acc = None
        for r, x in enumerate(v):
            if x and m[r][c]:
                p = x * m[r][c]
                acc = p if acc is None else acc + p
        out.append(acc if acc is not None else v[0] - v[0])
    return out


class VermaModule:
    """One standard module M(chi) at fixed couplings, with cached
    per-degree operator matrices and Gram matrices."""

    def __init__(self, rs: RootSystem, rep: Irrep, k1, k2):
        sl2_calibration(rs)
        self.rs = rs
        self.rep = rep
        self.symbolic = isinstance(k1, ParamPoly) or isinstance(k2, ParamPoly)
        if not self.symbolic:
            k1, k2 = rat(k1), rat(k2)
        self.k1, self.k2 = k1, k2
        self._low = {}
        self._gram = {}
        self._fmat = {}
        self._weyl = {}

    # -- layers and cached operators -------------------------------------------
    def layer_monomials(self, n: int):
        return monomials(self.rs.rank, n)

    def layer_dim(self, n: int) -> int:
        return len(self.layer_monomials(n)) * self.rep.dim

    def lowering(self, j: int, n: int):
        """Dunkl operator along the metric transfer of x_j, degree n -> n-1."""
        key = (j, n)
        hit = self._low.get(key)
        if hit is None:
            hit = b_lowering_matrix(self.rs, self.rep, j, n, self.k1, self.k2)
            self._low[key] = hit
        return hit

    def f_mat(self, n: int):
        """Quadratic lowering operator, degree n -> n-2."""
        hit = self._fmat.get(n)
        if hit is None:
            hit = f_matrix(self.rs, self.rep, n, self.k1, self.k2)
            self._fmat[n] = hit
        return hit

    def weyl(self, w: int, n: int):
        """Group element w on the degree-n layer (poly action tensor rep)."""
        key = (w, n)
        hit = self._weyl.get(key)
        if hit is None:
            base = weyl_poly_matrix(self.rs, w, n)
            rm = self.rep.matrix(w)
            d = self.rep.dim
            nn = len(base)
            out = [[QuadExt(0)] * (nn * d) for _ in range(nn * d)]
            for a in range(nn):
                for b in range(nn):
                    v = base[a][b]
                    if not v:
                        continue
                    for s in range(d):
                        for t in range(d):
                            if rm[s][t]:
                                out[a * d + s][b * d + t] = v * rm[s][t]
            hit = out
            self._weyl[key] = hit
        return hit

    # -- the contravariant form -------------------------------------------------
    def gram(self, n: int):
        """Gram matrix of the contravariant form on the degree-n layer.

        Built one degree at a time: the row of x_i * u equals the row of
        u in the previous Gram matrix composed with the Dunkl lowering
        along the transfer of x_i (the form moves multiplication to a
        Dunkl operator).
        """
        hit = self._gram.get(n)
        if hit is not None:
            return hit
        d = self.rep.dim
        if n == 0:
            g = [[QuadExt(1 if i == j else 0) for j in range(d)] for i in range(d)]
            self._gram[0] = g
            return g
        prev = self.gram(n - 1)
        basis = self.layer_monomials(n)
        prod1 = mat_mul(prev, self.lowering(0, n))
        rows = []
        for m in basis:
            if m[0] > 0:
                pidx = m[1] if self.rs.rank == 2 else 0
                for s in range(d):
                    rows.append(prod1[pidx * d + s])
            else:
                low2 = self.lowering(1, n)
                pidx = n - 1
                for s in range(d):
                    rows.append(_vec_mat(prev[pidx * d + s], low2))
        if not self.symbolic:
            for i in range(len(rows)):
                for j in range(i):
                    if rows[i][j] != rows[j][i]:
                        raise InvariantViolation(
                            f"{self.rs.label}/{self.rep.label}: form is not symmetric "
                            f"at degree {n}")
        self._gram[n] = rows
        return rows

    def gram_direct(self, n: int):
        """The same Gram matrix assembled monomial by monomial from
        composed Dunkl operators (slow; cross-check path)."""
        d = self.rep.dim
        basis = self.layer_monomials(n)
        rows = []
        for mono in basis:
            comp = None
            cur = n
            for j in range(self.rs.rank):
                for _ in range(mono[j]):
                    low = self.lowering(j, cur)
                    comp = low if comp is None else mat_mul(low, comp)
                    cur -= 1
            if comp is None:
                comp = [[QuadExt(1 if i == j else 0) for j in range(d)]
                        for i in range(d)]
            for s in range(d):
                rows.append(comp[s])
        return rows

    def layer_rank(self, n: int) -> int:
        g = self.gram(n)
        if self.symbolic:
            return bareiss_rank(g)
        return gauss_rank(g)

    def graded_dims(self, max_degree: int, stop_at_zero: bool = False):
        """Ranks of the form per degree = graded dimensions of the simple
        quotient."""
        dims = []
        for n in range(max_degree + 1):
            r = self.layer_rank(n)
            dims.append(r)
            if stop_at_zero and r == 0:
                break
        return dims

    # -- finiteness tests --------------------------------------------------------
    def epower_criterion(self):
        """Test whether the raised lowest-weight vector dies in the
        simple quotient.

        The lowest-weight scalar must be a nonpositive integer -m; then
        the (m+1)-st power of the raising quadric applied to the lowest
        weight vector is in the radical iff its pairings against the
        matching isotypic layer vanish.  Pairings are evaluated by
        moving the raising power to composed quadratic lowerings.
        """
        if self.symbolic:
            raise ValueError("the raised-vector test needs numeric couplings")
        b = lowest_weight_scalar(self.rs, self.rep, self.k1, self.k2)
        m0 = -b
        if not is_nonneg_int(m0):
            return EPowerResult(False, None, False)
        m = int(m0)
        top = 2 * m + 2
        comp = None
        cur = top
        for _ in range(m + 1):
            f = self.f_mat(cur)
            comp = f if comp is None else mat_mul(f, comp)
            cur -= 2
        action = [self.weyl(w, top) for w in range(len(self.rs.elements))]
        proj = isotypic_projector(self.rs, self.rep, action)
        cols = independent_columns(proj)
        d = self.rep.dim
        for c in cols:
            for r in range(d):
                acc = None
                for i in range(len(proj)):
                    if comp[r][i] and proj[i][c]:
                        v = comp[r][i] * proj[i][c]
                        acc = v if acc is None else acc + v
                if acc:
                    return EPowerResult(True, m, False)
        return EPowerResult(True, m, True)

    def classify(self, scan_bound: int | None = None):
        """Finite-dimensionality of the simple quotient, by both tests,
        cross-checked."""
        ep = self.epower_criterion()
        if scan_bound is None:
            bound = 2 * ep.m + 4 if ep.natural else DEFAULT_SCAN_BOUND
        else:
            bound = scan_bound
            if ep.natural:
                bound = max(bound, 2 * ep.m + 2)
        dims = []
        zero_at = None
        for n in range(bound + 1):
            r = self.layer_rank(n)
            if r == 0:
                zero_at = n
                break
            dims.append(r)
        gram_finite = zero_at is not None
        if gram_finite != ep.finite:
            raise InvariantViolation(
                f"{self.rs.label}/{self.rep.label} at k=({self.k1},{self.k2}): "
                f"the two finiteness tests disagree "
                f"(raised-vector: {ep.finite}, form scan: {gram_finite})")
        if gram_finite:
            top = zero_at - 1
            d = self.rep.dim
            ok = (ep.m is not None and top == 2 * ep.m
                  and dims[0] == d and dims[top] == d
                  and all(dims[i] == dims[top - i] for i in range(top + 1)))
            if not ok:
                raise InvariantViolation(
                    f"{self.rs.label}/{self.rep.label} at k=({self.k1},{self.k2}): "
                    f"graded dimensions {dims} break the finite-quotient shape")
            return ClassifyResult(self.rs.label, self.rep.label, self.k1, self.k2,
                                  True, ep.m, tuple(dims), sum(dims))
        return ClassifyResult(self.rs.label, self.rep.label, self.k1, self.k2,
                              False, None, tuple(dims), None)


class EPowerResult:
    """Outcome of the raised-vector finiteness test."""

    def __init__(self, natural: bool, m, finite: bool):
        self.natural = natural
        self.m = m
        self.finite = finite

    def __repr__(self):
        return f"EPowerResult(natural={self.natural}, m={self.m}, finite={self.finite})"


class ClassifyResult:
    """Classification of one simple quotient at fixed couplings."""

    def __init__(self, label, chi, k1, k2, finite, m, dims, total_dim):
        self.label = label
        self.chi = chi
        self.k1 = k1
        self.k2 = k2
        self.finite = finite
        self.m = m
        self.dims = dims
        self.total_dim = total_dim

    def as_dict(self):
        return {
            "type": self.label,
            "chi": self.chi,
            "k1": str(self.k1),
            "k2": str(self.k2),
            "finite": self.finite,
            "m": self.m,
            "graded_dims": list(self.dims),
            "dim": self.total_dim,
        }

    def __repr__(self):
        state = f"dim {self.total_dim}" if self.finite else "infinite"
        return (f"ClassifyResult({self.label}/{self.chi} at "
                f"k=({self.k1},{self.k2}): {state})")


def standard_module(label: str, chi: str, k1, k2) -> VermaModule:
    rs = build_root_system(label)
    return VermaModule(rs, get_irrep(rs, chi), k1, k2)


def classify(label: str, chi: str, k1, k2, scan_bound=None) -> ClassifyResult:
    return standard_module(label, chi, k1, k2).classify(scan_bound)
