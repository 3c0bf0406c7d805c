"""Bigraded free complexes: construction by iterated syzygies, minimalization,
Betti tables, F-regularity, and a degreewise linear-algebra exactness oracle.

A :class:`MatrixMap` is a map of shifted free modules given by a matrix of
polynomials; the bihomogeneity convention is the shifted-degree one: entry
(i, j) is zero or bihomogeneous of bidegree ``source.shifts[j] -
target.shifts[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import groebner, orders
from .errors import (
    InhomogeneousError,
    MissingWeightsError,
    NotAComplexError,
    NotMinimalError,
)
from .groebner import FreeModuleSpec, ModuleElement
from .ring import Bidegree, Polynomial, RingSpec, bidegree as poly_bidegree


class MatrixMap:
    """A bihomogeneous matrix between shifted free modules (target x source)."""

    __slots__ = ("source", "target", "entries")

    def __init__(self, source: FreeModuleSpec, target: FreeModuleSpec, entries,
                 check: bool = True):
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != target.rank or any(len(r) != source.rank for r in entries):
            raise ValueError("matrix shape does not match the module ranks")
        if source.ring != target.ring:
            raise ValueError("source and target over different rings")
        self.source = source
        self.target = target
        self.entries = entries
        if check:
            self._check_homogeneous()

    def _check_homogeneous(self):
        for i in range(self.target.rank):
            for j in range(self.source.rank):
                p = self.entries[i][j]
                if p.is_zero():
                    continue
                want = self.source.shifts[j] - self.target.shifts[i]
                got = poly_bidegree(p)
                if got != want:
                    raise InhomogeneousError(
                        f"entry ({i},{j}) has bidegree {got}, expected {want}"
                    )

    @property
    def ring(self) -> RingSpec:
        return self.source.ring

    def column(self, j: int) -> ModuleElement:
        return ModuleElement(self.target, [self.entries[i][j] for i in range(self.target.rank)])

    def columns(self) -> list[ModuleElement]:
        return [self.column(j) for j in range(self.source.rank)]

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def apply(self, v: ModuleElement) -> ModuleElement:
        if v.ambient.rank != self.source.rank:
            raise ValueError("vector rank mismatch")
        ring = self.ring
        out = []
        for i in range(self.target.rank):
            acc = ring.zero()
            for j in range(self.source.rank):
                e = self.entries[i][j]
                c = v.components[j]
                if e.is_zero() or c.is_zero():
                    continue
                acc = acc + e * c
            out.append(acc)
        return ModuleElement(self.target, out)

    def compose(self, other: "MatrixMap") -> "MatrixMap":
        """self o other (other feeds into self)."""
        if other.target.rank != self.source.rank:
            raise ValueError("composition shape mismatch")
        ring = self.ring
        rows = []
        for i in range(self.target.rank):
            row = []
            for j in range(other.source.rank):
                acc = ring.zero()
                for k in range(self.source.rank):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return MatrixMap(other.source, self.target, rows, check=False)

    def __repr__(self) -> str:
        return f"MatrixMap({self.target.rank}x{self.source.rank})"


def matrix_from_columns(target: FreeModuleSpec, cols: list[ModuleElement]) -> MatrixMap:
    """Matrix whose j-th column is cols[j]; source shifts from column bidegrees."""
    shifts = tuple(c.bidegree() for c in cols)
    source = FreeModuleSpec(target.ring, shifts)
    entries = [
        [cols[j].components[i] for j in range(len(cols))]
        for i in range(target.rank)
    ]
    return MatrixMap(source, target, entries)


class FreeComplex:
    """A chain of matrix maps d1, d2, ... with matching adjacent modules."""

    __slots__ = ("maps",)

    def __init__(self, maps, check_adjacent: bool = True):
        maps = tuple(maps)
        if not maps:
            raise ValueError("a complex needs at least the presentation map")
        if check_adjacent:
            for a, b in zip(maps, maps[1:]):
                if b.target != a.source:
                    raise ValueError("adjacent source/target specs disagree")
        self.maps = maps

    @property
    def ring(self) -> RingSpec:
        return self.maps[0].ring

    def __len__(self) -> int:
        return len(self.maps)

    def module(self, i: int) -> FreeModuleSpec:
        """The free module L_i (L_0 is the presentation's target)."""
        if i == 0:
            return self.maps[0].target
        return self.maps[i - 1].source

    def length(self) -> int:
        return len(self.maps)

    def ranks(self) -> list[int]:
        return [self.module(i).rank for i in range(len(self.maps) + 1)]

    def check_dd(self) -> None:
        for k in range(len(self.maps) - 1):
            if not self.maps[k].compose(self.maps[k + 1]).is_zero():
                raise NotAComplexError(f"d_{k+1} o d_{k+2} != 0")

    def is_complex(self) -> bool:
        try:
            self.check_dd()
            return True
        except NotAComplexError:
            return False


# --- resolution by iterated syzygies --------------------------------------------------


def resolve(presentation: MatrixMap, max_length: int) -> FreeComplex:
    """Extend a bihomogeneous presentation by iterated Schreyer syzygies.

    The result is exact in positions 1..max_length-1 (resolution construction
    stops early when a syzygy module turns out to be zero).  Once a level's
    columns form a Groebner basis the following levels are harvested directly
    under the induced Schreyer orders, which is the classical fast path.
    """
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    maps = [presentation]
    cols = presentation.columns()
    if any(c.is_zero() for c in cols):
        raise ValueError("presentation must not contain zero columns")
    order = None
    assume = False
    while len(maps) < max_length and cols:
        syz, next_order = groebner.syzygy_generators(
            cols, order=order, assume_groebner=assume
        )
        if not syz:
            break
        target = maps[-1].source
        # syzygy coordinates refer to the nonzero columns only
        if target.rank != len(cols):
            raise AssertionError("zero columns are only allowed in the presentation")
        maps.append(matrix_from_columns(target, syz))
        cols = syz
        order = next_order
        assume = next_order is not None
    return FreeComplex(maps)


def presentation_of_quotient(gens: list[Polynomial],
                             base_shift: Bidegree | None = None) -> MatrixMap:
    """Presentation matrix of R/(gens): one row, one column per generator."""
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    shift = base_shift if base_shift is not None else Bidegree(0, 0)
    target = FreeModuleSpec(ring, (shift,))
    cols = [ModuleElement(target, [g]) for g in gens if not g.is_zero()]
    return matrix_from_columns(target, cols)


# --- minimalization ------------------------------------------------------------------


def _find_unit(entries) -> tuple[int, int] | None:
    for i, row in enumerate(entries):
        for j, p in enumerate(row):
            if p.is_constant() and not p.is_zero():
                return (i, j)
    return None


def minimalize(c: FreeComplex) -> FreeComplex:
    """Cancel unit entries pairwise until every entry has zero constant term.

    The result is homotopy-equivalent to the input (cokernel of d1 unchanged
    up to isomorphism).  Cancellation picks the lowest homological index with
    a unit entry, then the lexicographically first position, so the output
    matrices are deterministic.
    """
    c.check_dd()
    mats = [[list(row) for row in m.entries] for m in c.maps]
    shifts = [list(c.module(i).shifts) for i in range(len(c.maps) + 1)]

    while True:
        hit = None
        for k, m in enumerate(mats):
            pos = _find_unit(m)
            if pos is not None:
                hit = (k, pos)
                break
        if hit is None:
            break
        k, (r, cc) = hit
        m = mats[k]
        u = m[r][cc].constant_coeff()
        n_rows = len(m)
        n_cols = len(m[0]) if m else 0
        # Gaussian cancellation of row r against column cc.
        for i in range(n_rows):
            if i == r:
                continue
            coe = m[i][cc]
            if coe.is_zero():
                continue
            scale = coe / u
            for j in range(n_cols):
                if j == cc:
                    continue
                m[i][j] = m[i][j] - scale * m[r][j]
        # Delete row r / column cc from d_{k+1}; row cc from the next map,
        # column r from the previous one.
        mats[k] = [
            [m[i][j] for j in range(n_cols) if j != cc]
            for i in range(n_rows) if i != r
        ]
        del shifts[k + 1][cc]
        del shifts[k][r]
        if k + 1 < len(mats):
            nxt = mats[k + 1]
            mats[k + 1] = [row for i, row in enumerate(nxt) if i != cc]
        if k > 0:
            prev = mats[k - 1]
            mats[k - 1] = [
                [row[j] for j in range(len(row)) if j != r] for row in prev
            ]

    # Drop trailing zero-rank levels.
    while len(mats) > 1 and not shifts[len(mats)]:
        mats.pop()
    ring = c.ring
    specs = [FreeModuleSpec(ring, tuple(s)) for s in shifts[: len(mats) + 1]]
    out_maps = []
    for k, m in enumerate(mats):
        out_maps.append(MatrixMap(specs[k + 1], specs[k], m, check=False))
    out = FreeComplex(out_maps, check_adjacent=True)
    out.check_dd()
    return out


# --- Betti data ----------------------------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """Ranks and shift multisets of a minimal bigraded free complex."""

    ranks: tuple[int, ...]
    shifts: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        if len(self.ranks) != len(self.shifts):
            raise ValueError("ranks and shifts length mismatch")
        for r, s in zip(self.ranks, self.shifts):
            if r != len(s):
                raise ValueError("rank must equal the shift multiset cardinality")

    def betti_numbers(self) -> list[int]:
        return list(self.ranks)

    def regularity_F(self) -> int:
        return max(n - i for i, level in enumerate(self.shifts) for (n, _) in level)

    def to_json_dict(self) -> dict:
        return {
            "betti": list(self.ranks),
            "shifts": [[[n, m] for (n, m) in level] for level in self.shifts],
            "regularity_F": self.regularity_F(),
        }


def betti_table(c: FreeComplex) -> BettiTable:
    """Ranks and shift multisets of a minimal complex (errors when not minimal)."""
    for k, m in enumerate(c.maps):
        for row in m.entries:
            for p in row:
                if p.constant_coeff():
                    raise NotMinimalError(
                        f"d_{k+1} has an entry with a nonzero constant term"
                    )
    ranks = []
    shifts = []
    for i in range(len(c.maps) + 1):
        spec = c.module(i)
        if i > 0 and spec.rank == 0:
            break
        ranks.append(spec.rank)
        shifts.append(tuple(sorted(s.as_pair() for s in spec.shifts)))
    return BettiTable(tuple(ranks), tuple(shifts))


def regularity_F(t: BettiTable) -> int:
    return t.regularity_F()


# --- exactness oracle (degreewise linear algebra) --------------------------------------


def _positive_grading(ring: RingSpec) -> list[Fraction]:
    """Per-variable gamma weights (F-weight + w-weight), all required positive."""
    gam = []
    for i in range(ring.nvars):
        g = Fraction(ring.f_weights[i])
        if ring.w_weights is not None:
            g += ring.w_weights[i]
        if g <= 0:
            raise MissingWeightsError(
                f"variable {ring.vars[i]!r} has no positive F+w weight; "
                "the exactness oracle needs a positive grading"
            )
        gam.append(g)
    return gam


def _monomials_of_tridegree(ring: RingSpec, d: int, k: int, w: Fraction):
    """Exponent tuples with exact F-degree d, V-degree k, and w-degree w.

    Assumes F-weights >= 0 and w-weights >= 0 with F + w > 0 per variable
    (checked by the caller via the positive grading), so the recursion is
    finite.
    """
    n = ring.nvars
    fw = ring.f_weights
    vw = ring.v_weights
    ww = ring.w_weights
    out = []

    def rec(i, acc, fd, wd):
        if fd < 0 or wd < 0:
            return
        if i == n:
            if fd == 0 and wd == 0:
                m = tuple(acc)
                if ring.mono_bidegree(m).k == k:
                    out.append(m)
            return
        f, g = fw[i], ww[i] if ww is not None else Fraction(0)
        e = 0
        while True:
            if f and e * f > fd:
                break
            if g and e * g > wd:
                break
            if not f and not g and e > 0:
                break  # cannot happen: gamma positive
            rec(i + 1, acc + [e], fd - e * f, wd - e * g)
            e += 1

    rec(0, [], d, w if ww is not None else Fraction(0))
    if ww is None:
        # without w-weights the third grading is trivial: filter on (d, k) only
        return [m for m in out]
    return out


def _w_shifts(c: FreeComplex, base=None) -> list[list[Fraction]]:
    """Propagate w-degree shifts of the free modules from L_0 up the complex."""
    ring = c.ring
    shifts = [list(base) if base is not None else [Fraction(0)] * c.module(0).rank]
    for k, m in enumerate(c.maps):
        src = [None] * m.source.rank
        for j in range(m.source.rank):
            for i in range(m.target.rank):
                p = m.entries[i][j]
                if p.is_zero():
                    continue
                if ring.w_weights is not None:
                    w = p.w_degree()
                else:
                    w = Fraction(0)
                val = w + shifts[k][i]
                if src[j] is None:
                    src[j] = val
                elif src[j] != val:
                    raise InhomogeneousError(
                        f"column {j} of d_{k+1} is not w-homogeneous as a vector"
                    )
        shifts.append([s if s is not None else Fraction(0) for s in src])
    return shifts


def _exact_rank_sparse(cols: list[list[tuple[int, Fraction]]]) -> int:
    """Exact rank of a matrix given as sparse columns, by Gaussian elimination."""
    pivots: dict[int, dict[int, Fraction]] = {}  # pivot row -> reduced column
    rank = 0
    for col in cols:
        cur = {r: v for r, v in col if v}
        while cur:
            r = min(cur)
            piv = pivots.get(r)
            if piv is None:
                inv = cur[r]
                pivots[r] = {rr: vv / inv for rr, vv in cur.items()}
                rank += 1
                break
            f = cur[r]
            for rr, vv in piv.items():
                nv = cur.get(rr, Fraction(0)) - f * vv
                if nv:
                    cur[rr] = nv
                else:
                    cur.pop(rr, None)
    return rank


_RANK_PRIMES = (2147483629, 2147483587, 2147483563)


def _rank_mod_p(cols: list[list[tuple[int, Fraction]]], nrows: int, p: int) -> int | None:
    """Rank of the same matrix over GF(p); None when a denominator hits p."""
    try:
        import numpy as np
    except ImportError:
        return None
    if not cols or nrows == 0:
        return 0
    mat = np.zeros((len(cols), nrows), dtype=np.int64)
    for j, col in enumerate(cols):
        for r, v in col:
            den = v.denominator % p
            if den == 0:
                return None
            mat[j, r] = (v.numerator % p) * pow(den, p - 2, p) % p
    rank = 0
    rows_n = mat.shape[0]
    for col in range(nrows):
        piv = None
        for i in range(rank, rows_n):
            if mat[i, col]:
                piv = i
                break
        if piv is None:
            continue
        mat[[rank, piv]] = mat[[piv, rank]]
        inv = pow(int(mat[rank, col]), p - 2, p)
        mat[rank] = mat[rank] * inv % p
        rest = mat[rank + 1:, col].copy()
        nz = rest.nonzero()[0]
        if nz.size:
            mat[rank + 1:][nz] = (mat[rank + 1:][nz] - rest[nz, None] * mat[rank]) % p
        rank += 1
        if rank == rows_n:
            break
    return rank


def _piece_ranks_exact(cols_here, cols_above, dim: int) -> bool:
    r_here = _exact_rank_sparse(cols_here)
    r_above = _exact_rank_sparse(cols_above)
    return r_here + r_above == dim


def _piece_is_exact(cols_here, cols_above, dim: int, nrows_below: int) -> bool:
    """Exactness of one graded piece: rank d_here + rank d_above == dim.

    The two ranks are first computed over GF(p).  Because rank over GF(p)
    never exceeds the rational rank, and im(d_above) is always contained in
    ker(d_here), ``rank_p(here) + rank_p(above) == dim`` already *proves*
    exactness over Q.  Only when the modular certificate fails do we fall
    back to exact rational elimination to decide honestly.
    """
    for p in _RANK_PRIMES:
        r_here = _rank_mod_p(cols_here, nrows_below, p)
        r_above = _rank_mod_p(cols_above, dim, p)
        if r_here is None or r_above is None:
            continue
        if r_here + r_above == dim:
            return True
        break
    return _piece_ranks_exact(cols_here, cols_above, dim)


def homology_is_zero(c: FreeComplex, position: int,
                     window: tuple[tuple[int, int], tuple[int, int]] | None = None,
                     w_cap: Fraction | None = None,
                     base_w_shifts=None) -> bool:
    """Brute-force exactness check at a homological position, degree by degree.

    Works (F, V, w)-graded piece by piece: within every piece whose bidegree
    lies in the window and whose w-degree is at most ``w_cap``, exactness is
    equivalent to ``rank d_{position+1} + rank d_position == dim``.  Ranks
    come from linear algebra only (no Groebner machinery): a sound one-sided
    modular certificate with an exact rational fallback.  True means exact
    everywhere within the window; an insufficient window can only produce
    False, never a wrong True.
    """
    if position < 1 or position > len(c.maps):
        raise ValueError("position out of range")
    ring = c.ring
    _positive_grading(ring)  # raises unless F + w weights are positive
    wsh = _w_shifts(c, base=base_w_shifts)

    d_here = c.maps[position - 1]
    d_above = c.maps[position] if position < len(c.maps) else None

    levels = [i for i in (position - 1, position, position + 1) if i <= len(c.maps)]
    all_shifts = [s.as_pair() for i in levels for s in c.module(i).shifts]
    if window is None:
        dmax = max((abs(d) for d, _ in all_shifts), default=0) + 2
        kmax = max((abs(k) for _, k in all_shifts), default=0) + 2
        window = ((-dmax, dmax), (-kmax, kmax))
    w_shift_values = [w for lvl in levels for w in wsh[lvl]]
    if w_cap is None:
        w_cap = max(w_shift_values, default=Fraction(0)) + 1

    # label grid: w moves on the lattice generated by the variable w-weights
    # and the module w-shifts
    denoms = {v.denominator for v in w_shift_values}
    if ring.w_weights is not None:
        denoms |= {v.denominator for v in ring.w_weights}
    step = Fraction(1)
    for q in denoms:
        step = Fraction(1, (step.denominator * q) // _gcd(step.denominator, q))
    w_min = min(w_shift_values, default=Fraction(0))
    w_values = []
    v = w_min
    while v <= w_cap:
        w_values.append(v)
        v += step

    def piece_basis(level, label):
        d, k, w = label
        spec = c.module(level)
        out = []
        for comp in range(spec.rank):
            sd, sk = spec.shifts[comp].as_pair()
            sw = wsh[level][comp]
            if d - sd < 0:
                continue
            if ring.w_weights is not None and w - sw < 0:
                continue
            if ring.w_weights is None and w != sw:
                continue
            for m in _monomials_of_tridegree(ring, d - sd, k - sk, w - sw):
                out.append((comp, m))
        return out

    def restricted_columns(mat: MatrixMap, dom, cod):
        cod_index = {t: i for i, t in enumerate(cod)}
        cols = []
        for (comp, m) in dom:
            col: dict[int, Fraction] = {}
            for i in range(mat.target.rank):
                p = mat.entries[i][comp]
                if p.is_zero():
                    continue
                for e, coef in p.terms.items():
                    t = (i, tuple(a + b for a, b in zip(e, m)))
                    idx = cod_index.get(t)
                    if idx is None:
                        # impossible for (F,V,w)-homogeneous complexes: the
                        # image stays inside the same fully enumerated piece
                        raise AssertionError("image term left its graded piece")
                    col[idx] = col.get(idx, Fraction(0)) + coef
            cols.append(sorted((r, v) for r, v in col.items() if v))
        return cols

    for d in range(window[0][0], window[0][1] + 1):
        for k in range(window[1][0], window[1][1] + 1):
            for w in w_values:
                label = (d, k, w)
                dom = piece_basis(position, label)
                if not dom:
                    continue
                cod = piece_basis(position - 1, label)
                cols_here = restricted_columns(d_here, dom, cod)
                if d_above is not None:
                    dom_above = piece_basis(position + 1, label)
                    cols_above = restricted_columns(d_above, dom_above, dom)
                else:
                    cols_above = []
                if not _piece_is_exact(cols_here, cols_above, len(dom), len(cod)):
                    return False
    return True


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
