# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for the hot polynomial-reduction loops.

Function-for-function mirror of `_pykernel.py`; the data model (term maps
keyed by ``(component, exponent_tuple)`` with Fraction coefficients) is
identical, so the two backends are interchangeable and can be compared by
the benchmark.
"""

from fractions import Fraction

BACKEND = "cython"

_ZERO = Fraction(0)


def mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


def mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


def mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long d
    out = [0] * n
    for i in range(n):
        d = a[i] - b[i]
        if d < 0:
            return None
        out[i] = d
    return tuple(out)


def mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = a[i] if a[i] > b[i] else b[i]
    return tuple(out)


cdef class KernelOrder:
    """Comparison oracle for module monomials; see the pure twin for docs."""

    cdef public tuple rows
    cdef public int kind
    cdef public tuple comp_monos
    cdef public tuple comp_ties
    cdef dict _cache

    def __init__(self, rows, kind, comp_monos, comp_ties=None):
        self.rows = tuple(tuple(r) for r in rows)
        self.kind = kind
        self.comp_monos = tuple(comp_monos) if comp_monos is not None else None
        self.comp_ties = tuple(comp_ties) if comp_ties is not None else None
        self._cache = {}

    cdef tuple _dot_rows(self, tuple exps):
        cdef Py_ssize_t i, j, n = len(exps)
        cdef long acc
        cdef tuple row
        out = []
        for j in range(len(self.rows)):
            row = <tuple> self.rows[j]
            acc = 0
            for i in range(n):
                acc += <long> row[i] * <long> exps[i]
            out.append(acc)
        return tuple(out)

    def key(self, int comp, tuple exps):
        cdef tuple cache_key = (comp, exps)
        k = self._cache.get(cache_key)
        if k is not None:
            return k
        cdef tuple base
        if self.kind == 2:
            base = mono_mul(exps, <tuple> self.comp_monos[comp])
            k = self._dot_rows(base) + <tuple> self.comp_ties[comp]
        elif self.kind == 1:
            k = (-comp,) + self._dot_rows(exps)
        else:
            k = self._dot_rows(exps) + (-comp,)
        self._cache[cache_key] = k
        return k

    def lead(self, dict terms):
        best = None
        best_key = None
        for t in terms:
            k = self.key(<int> (<tuple> t)[0], <tuple> (<tuple> t)[1])
            if best_key is None or k > best_key:
                best, best_key = t, k
        return best

    def mono_key(self, tuple exps):
        return self._dot_rows(exps)


def add_scaled(dict h, dict g, c, tuple mono):
    """In place: h += c * x^mono * g.  Zero coefficients are dropped."""
    cdef tuple key, e
    cdef int comp
    for t, gc in g.items():
        comp = <int> (<tuple> t)[0]
        e = <tuple> (<tuple> t)[1]
        key = (comp, mono_mul(e, mono))
        v = h.get(key)
        if v is None:
            h[key] = c * gc
        else:
            v = v + c * gc
            if v:
                h[key] = v
            else:
                del h[key]


def reduce_full(dict f, list gens, list leads, list lcs, KernelOrder order,
                bint track=False):
    """Fully reduce ``f`` modulo ``gens``; mirror of the pure implementation."""
    cdef dict h = dict(f)
    cdef dict rem = {}
    cdef Py_ssize_t i, n = len(gens)
    cdef int comp, lc_comp
    cdef tuple exps, lc_exps, lt, m, mm
    cofs = [dict() for _ in range(n)] if track else None
    while h:
        lt = <tuple> order.lead(h)
        comp = <int> lt[0]
        exps = <tuple> lt[1]
        c = h[lt]
        ri = -1
        m = None
        for i in range(n):
            lc_comp = <int> (<tuple> leads[i])[0]
            if lc_comp != comp:
                continue
            lc_exps = <tuple> (<tuple> leads[i])[1]
            mm = mono_div(exps, lc_exps)
            if mm is not None:
                ri = i
                m = mm
                break
        if ri < 0:
            rem[lt] = c
            del h[lt]
            continue
        coef = c / lcs[ri]
        add_scaled(h, <dict> gens[ri], -coef, m)
        h.pop(lt, None)
        if track:
            cd = <dict> cofs[ri]
            v = cd.get(m)
            if v is None:
                cd[m] = coef
            else:
                v = v + coef
                if v:
                    cd[m] = v
                else:
                    del cd[m]
    return rem, cofs
