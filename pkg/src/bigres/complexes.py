"""Explicit complex constructors: Koszul, generalized Koszul (Eagon-Northcott
and Buchsbaum-Rim), chain-map lifting, and mapping cones.

Basis conventions are fixed so that matrices are reproducible: the degree-p
exterior basis is indexed by p-subsets in lexicographic order, and the
symmetric part S_j is spanned by X1^j, X1^(j-1)*X2, ..., X2^j in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import groebner
from .errors import HypothesisError, LiftError
from .groebner import FreeModuleSpec, ModuleElement
from .resolution import FreeComplex, MatrixMap
from .ring import Bidegree, Polynomial, RingSpec, ZERO_BIDEGREE, bidegree as poly_bidegree


@dataclass(frozen=True)
class KoszulSpec:
    """Data for a Koszul complex on a list of nonzero ring elements."""

    elements: tuple[Polynomial, ...]
    base_shift: Bidegree = ZERO_BIDEGREE

    def __post_init__(self):
        if not self.elements:
            raise ValueError("Koszul complex needs at least one element")
        if any(p.is_zero() for p in self.elements):
            raise ValueError("Koszul elements must be nonzero")


def koszul(spec: KoszulSpec) -> FreeComplex:
    """The Koszul complex with the alternating-sign differential.

    d(e_{i1} ^ ... ^ e_{ip}) = sum_k (-1)^(k-1) a_{ik} e_{i1} ^ ... ^ e_{ik-1}
    ^ e_{ik+1} ^ ... ^ e_{ip}.
    """
    elems = spec.elements
    ring = elems[0].ring
    r = len(elems)
    degs = [poly_bidegree(a) for a in elems]

    def level_spec(p: int) -> FreeModuleSpec:
        shifts = []
        for S in combinations(range(r), p):
            d = spec.base_shift
            for i in S:
                d = d + degs[i]
            shifts.append(d)
        return FreeModuleSpec(ring, tuple(shifts))

    specs = [level_spec(p) for p in range(r + 1)]
    maps = []
    for p in range(1, r + 1):
        src = list(combinations(range(r), p))
        tgt = list(combinations(range(r), p - 1))
        tgt_index = {S: i for i, S in enumerate(tgt)}
        entries = [[ring.zero() for _ in src] for _ in tgt]
        for j, S in enumerate(src):
            for k, i in enumerate(S):
                rest = S[:k] + S[k + 1:]
                sign = 1 if k % 2 == 0 else -1
                row = tgt_index[rest]
                entries[row][j] = entries[row][j] + elems[i] * sign
        maps.append(MatrixMap(specs[p], specs[p - 1], entries))
    return FreeComplex(maps)


@dataclass(frozen=True)
class GenKoszulSpec:
    """A 2 x n matrix, the family parameter t, and the truncation degree q."""

    A: tuple[tuple[Polynomial, ...], tuple[Polynomial, ...]]
    t: int
    q: int = 0
    base_shift: Bidegree = ZERO_BIDEGREE

    def __post_init__(self):
        if len(self.A) != 2:
            raise ValueError("only 2-row matrices are supported")
        if len(self.A[0]) != len(self.A[1]) or len(self.A[0]) < 2:
            raise ValueError("need two rows of equal length >= 2")

    @property
    def ncols(self) -> int:
        return len(self.A[0])


def _sym_basis(j: int):
    """S_j basis as X1-exponents: X1^j, X1^(j-1) X2, ..., X2^j."""
    return [(j - b, b) for b in range(j + 1)]


def generalized_koszul(spec: GenKoszulSpec) -> FreeComplex:
    """Northcott's truncated complex K_{n-m+1} -> ... -> K_q for a 2-row matrix.

    K_h = Lambda^(m+h-1) (x) S_(h-t-1) for h > t and Lambda^h (x) S_(t-h) for
    h <= t; the differential acts by X_i^(-1) division above the junction, by
    the composite delta_2(delta_1(.)) at h = t+1, and by multiplication by
    X_i below.  K(0) is the Eagon-Northcott complex, K(1) the Buchsbaum-Rim
    complex.  Shifts are inferred from the entries by propagation from the
    bottom level.
    """
    n = spec.ncols
    m = 2
    t = spec.t
    # Northcott's hypothesis is t <= n - m; the boundary t = n - m + 1 keeps a
    # purely head-sided truncation that is still exact in the Buchsbaum-Rim
    # application with n = 2 (checked by the exactness tests, not assumed).
    if t > n - m + 1:
        raise HypothesisError(f"t={t} exceeds n-m={n-m}")
    if spec.q < 0 or spec.q > n - m + 1:
        raise ValueError("truncation degree out of range")
    A = spec.A
    ring = A[0][0].ring
    top = n - m + 1

    def level_basis(h: int):
        if h > t:
            lam = list(combinations(range(n), m + h - 1))
            sym = _sym_basis(h - t - 1)
        else:
            lam = list(combinations(range(n), h))
            sym = _sym_basis(t - h)
        return [(w, a) for w in lam for a in sym]

    def delta(row: int, w: tuple[int, ...]):
        """Koszul differential of row `row` on a basis wedge: list of (coef, wedge)."""
        out = []
        for k, i in enumerate(w):
            rest = w[:k] + w[k + 1:]
            sign = 1 if k % 2 == 0 else -1
            out.append((A[row][i] * sign, rest))
        return out

    bases = {h: level_basis(h) for h in range(spec.q, top + 1)}
    raw_maps = {}
    for h in range(spec.q + 1, top + 1):
        src = bases[h]
        tgt = bases[h - 1]
        tgt_index = {b: i for i, b in enumerate(tgt)}
        entries = [[ring.zero() for _ in src] for _ in tgt]
        for j, (w, (a, b)) in enumerate(src):
            if h > t + 1:
                for row, drop in ((0, (a - 1, b)), (1, (a, b - 1))):
                    if drop[0] < 0 or drop[1] < 0:
                        continue
                    for coef, rest in delta(row, w):
                        i = tgt_index[(rest, drop)]
                        entries[i][j] = entries[i][j] + coef
            elif h == t + 1:
                for c1, rest1 in delta(0, w):
                    for c2, rest2 in delta(1, rest1):
                        i = tgt_index[(rest2, (a, b))]
                        entries[i][j] = entries[i][j] + c1 * c2
            else:
                for row, add in ((0, (a + 1, b)), (1, (a, b + 1))):
                    for coef, rest in delta(row, w):
                        i = tgt_index[(rest, add)]
                        entries[i][j] = entries[i][j] + coef
        raw_maps[h] = entries

    # Bottom-level shifts: for a head level K_q = Lambda^q (x) S_(t-q) the X1
    # and X2 slots differ by the column-wise degree gap of the two rows.
    delta_deg = None
    for i in range(n):
        gap = poly_bidegree(A[1][i]) - poly_bidegree(A[0][i])
        if delta_deg is None:
            delta_deg = gap
        elif gap != delta_deg:
            raise ValueError("rows must have a uniform columnwise degree gap")
    row0_degs = [poly_bidegree(A[0][i]) for i in range(n)]

    shifts = {}
    bottom = []
    for (w, (a, b)) in bases[spec.q]:
        d = spec.base_shift + Bidegree(0, 0)
        for i in w:
            d = d + row0_degs[i]
        if spec.q <= t:
            # head: X1 weighs delta_deg more than X2
            for _ in range(a):
                d = d + delta_deg
        else:
            # tail: X2 weighs delta_deg more than X1
            for _ in range(b):
                d = d + delta_deg
        bottom.append(d)
    shifts[spec.q] = bottom

    for h in range(spec.q + 1, top + 1):
        entries = raw_maps[h]
        tgt_shifts = shifts[h - 1]
        src_shifts = []
        for j in range(len(bases[h])):
            val = None
            for i in range(len(bases[h - 1])):
                p = entries[i][j]
                if p.is_zero():
                    continue
                cand = poly_bidegree(p) + tgt_shifts[i]
                if val is None:
                    val = cand
                elif cand != val:
                    raise ValueError("inconsistent shift propagation")
            if val is None:
                raise ValueError("zero column prevents shift inference")
            src_shifts.append(val)
        shifts[h] = src_shifts

    specs = {
        h: FreeModuleSpec(ring, tuple(shifts[h])) for h in range(spec.q, top + 1)
    }
    maps = [
        MatrixMap(specs[h], specs[h - 1], raw_maps[h])
        for h in range(spec.q + 1, top + 1)
    ]
    out = FreeComplex(maps)
    out.check_dd()
    return out


def prop16_matrix(jacobian: list[Polynomial], xi_names: list[str]) -> GenKoszulSpec:
    """The 2 x n matrix with rows (f'_1..f'_n) and (-xi_1..-xi_n)."""
    ring = jacobian[0].ring
    row0 = tuple(jacobian)
    row1 = tuple(-ring.var(nm) for nm in xi_names)
    return GenKoszulSpec((row0, row1), t=0)


def eagon_northcott(jacobian: list[Polynomial], xi_names: list[str],
                    base_shift: Bidegree = ZERO_BIDEGREE) -> FreeComplex:
    """The K(0) complex of the Prop-16-style matrix (resolves R/(S_ij))."""
    spec = prop16_matrix(jacobian, xi_names)
    return generalized_koszul(GenKoszulSpec(spec.A, t=0, base_shift=base_shift))


def buchsbaum_rim(jacobian: list[Polynomial], xi_names: list[str],
                  base_shift: Bidegree = ZERO_BIDEGREE) -> FreeComplex:
    """The K(1) complex (resolves R^2 / sum R (f'_i, -xi_i))."""
    spec = prop16_matrix(jacobian, xi_names)
    return generalized_koszul(GenKoszulSpec(spec.A, t=1, base_shift=base_shift))


# --- chain maps and cones -------------------------------------------------------------


@dataclass(frozen=True)
class ChainMap:
    """A degreewise map of complexes commuting with the differentials."""

    source: FreeComplex
    target: FreeComplex
    levels: tuple[MatrixMap, ...]

    def __post_init__(self):
        if len(self.levels) != len(self.source.maps) + 1:
            raise ValueError("need one level map per source module")
        for i, lvl in enumerate(self.levels):
            if lvl.source != self.source.module(i):
                raise ValueError(f"level {i} source mismatch")
            if lvl.target != self.target.module(i):
                raise ValueError(f"level {i} target mismatch")

    def check_commutes(self) -> None:
        for i in range(1, len(self.levels)):
            lhs = self.target.maps[i - 1].compose(self.levels[i])
            rhs = self.levels[i - 1].compose(self.source.maps[i - 1])
            for r_lhs, r_rhs in zip(lhs.entries, rhs.entries):
                for a, b in zip(r_lhs, r_rhs):
                    if not (a - b).is_zero():
                        raise LiftError(f"chain map fails to commute at level {i}")


def shift_complex(c: FreeComplex, offset: Bidegree) -> FreeComplex:
    """The same complex with every module shift translated by ``offset``."""
    maps = []
    for m in c.maps:
        src = FreeModuleSpec(m.ring, tuple(s + offset for s in m.source.shifts))
        tgt = FreeModuleSpec(m.ring, tuple(s + offset for s in m.target.shifts))
        maps.append(MatrixMap(src, tgt, m.entries, check=False))
    return FreeComplex(maps)


def multiplication_chain_map(c: FreeComplex, p: Polynomial) -> ChainMap:
    """Multiplication by a bihomogeneous element, as a chain map into ``c``.

    The source is ``c`` with shifts raised by the element's bidegree so the
    level maps are bihomogeneous.
    """
    offset = poly_bidegree(p)
    src = shift_complex(c, offset)
    levels = []
    for i in range(len(c.maps) + 1):
        spec_s = src.module(i)
        spec_t = c.module(i)
        entries = [
            [p if i2 == j2 else p.ring.zero() for j2 in range(spec_s.rank)]
            for i2 in range(spec_t.rank)
        ]
        levels.append(MatrixMap(spec_s, spec_t, entries))
    return ChainMap(src, c, tuple(levels))


def lift_chain_map(f0: MatrixMap, source: FreeComplex, target: FreeComplex) -> ChainMap:
    """Extend a degree-0 map to a chain map, level by level, via Groebner division.

    Each composite alpha_{i-1} d_i e_j is expressed in terms of the target
    differential's columns; failure of that membership (the target not exact
    where needed, or f0 not descending to the cokernels) raises LiftError.
    """
    if f0.source != source.module(0) or f0.target != target.module(0):
        raise ValueError("f0 must map source L0 to target L0")
    levels = [f0]
    for i in range(1, len(source.maps) + 1):
        prev = levels[i - 1]
        composite = prev.compose(source.maps[i - 1])
        if i > len(target.maps):
            if not composite.is_zero():
                raise LiftError(f"target complex too short to lift level {i}")
            src_spec = source.module(i)
            tgt_spec = FreeModuleSpec(target.ring, ())
            levels.append(MatrixMap(src_spec, tgt_spec,
                                    [[] for _ in range(0)], check=False))
            continue
        d_target = target.maps[i - 1]
        cols = d_target.columns()
        needed = [composite.column(j) for j in range(composite.source.rank)]
        coeffs = groebner.express_in_terms(cols, needed)
        entries = [[target.ring.zero()] * len(needed)
                   for _ in range(d_target.source.rank)]
        for j, expr in enumerate(coeffs):
            if expr is None:
                raise LiftError(
                    f"composite at level {i} is not in the image of the target"
                )
            for a, coef in enumerate(expr):
                entries[a][j] = coef
        levels.append(MatrixMap(source.module(i), d_target.source, entries))
    cm = ChainMap(source, target, tuple(levels))
    cm.check_commutes()
    return cm


def mapping_cone(alpha: ChainMap) -> FreeComplex:
    """Cone with terms target_i (+) source_(i-1), differential [[d', a], [0, -d]]."""
    src, tgt = alpha.source, alpha.target
    ring = tgt.ring
    n_levels = max(len(tgt.maps) + 1, len(src.maps) + 2)

    def src_module(i):
        if 0 <= i <= len(src.maps):
            return src.module(i)
        return FreeModuleSpec(ring, ())

    def tgt_module(i):
        if 0 <= i <= len(tgt.maps):
            return tgt.module(i)
        return FreeModuleSpec(ring, ())

    def cone_spec(i):
        return FreeModuleSpec(
            ring, tgt_module(i).shifts + src_module(i - 1).shifts
        )

    maps = []
    for i in range(1, n_levels):
        ct, cs = cone_spec(i - 1), cone_spec(i)
        rows = []
        t_t, t_s = tgt_module(i - 1).rank, src_module(i - 2).rank
        s_t, s_s = tgt_module(i).rank, src_module(i - 1).rank
        d_t = tgt.maps[i - 1] if i - 1 < len(tgt.maps) else None
        d_s = src.maps[i - 2] if 0 <= i - 2 < len(src.maps) else None
        a = alpha.levels[i - 1] if i - 1 < len(alpha.levels) else None
        for r in range(t_t):
            row = []
            for c in range(s_t):
                row.append(d_t.entries[r][c] if d_t is not None else ring.zero())
            for c in range(s_s):
                row.append(a.entries[r][c] if a is not None else ring.zero())
            rows.append(row)
        for r in range(t_s):
            row = [ring.zero()] * s_t
            for c in range(s_s):
                row.append(-d_s.entries[r][c] if d_s is not None else ring.zero())
            rows.append(row)
        maps.append(MatrixMap(cs, ct, rows))
    out = FreeComplex(maps)
    out.check_dd()
    return out
