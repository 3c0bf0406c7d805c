"""Pure-Python kernel for the hot polynomial-reduction loops.

Terms of a module element are stored as a dict mapping ``(component,
exponent_tuple)`` to a nonzero Fraction.  Plain ring elements are the rank-1
case with component 0.  Cofactors recorded during division are plain monomial
dicts ``exponent_tuple -> Fraction``.

The compiled twin (`_cykernel.pyx`) mirrors this module function for
function; `bigres._kernel` picks one at import time.
"""

from __future__ import annotations

BACKEND = "python"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """Does x^a divide x^b?"""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(a, b):
    """Exponent vector of x^a / x^b, or None when not divisible."""
    out = []
    for x, y in zip(a, b):
        d = x - y
        if d < 0:
            return None
        out.append(d)
    return tuple(out)


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class KernelOrder:
    """Comparison oracle for module monomials ``(component, exponents)``.

    kind 0 = term-over-position, 1 = position-over-term, 2 = Schreyer
    (compare exponents shifted by a per-component monomial, ties broken by a
    per-component integer tuple).  Keys are cached per monomial because
    Buchberger revisits the same monomials constantly.
    """

    __slots__ = ("rows", "kind", "comp_monos", "comp_ties", "_cache")

    def __init__(self, rows, kind, comp_monos, comp_ties=None):
        self.rows = rows
        self.kind = kind
        self.comp_monos = comp_monos
        self.comp_ties = comp_ties
        self._cache = {}

    def key(self, comp, exps):
        k = self._cache.get((comp, exps))
        if k is not None:
            return k
        if self.kind == 2:
            base = mono_mul(exps, self.comp_monos[comp])
            k = tuple(
                sum(w * e for w, e in zip(row, base)) for row in self.rows
            ) + self.comp_ties[comp]
        elif self.kind == 1:
            k = (-comp,) + tuple(
                sum(w * e for w, e in zip(row, exps)) for row in self.rows
            )
        else:
            k = tuple(
                sum(w * e for w, e in zip(row, exps)) for row in self.rows
            ) + (-comp,)
        self._cache[(comp, exps)] = k
        return k

    def lead(self, terms):
        """Largest module monomial occurring in ``terms`` (a nonempty dict)."""
        best = None
        best_key = None
        for t in terms:
            k = self.key(t[0], t[1])
            if best_key is None or k > best_key:
                best, best_key = t, k
        return best

    def mono_key(self, exps):
        return tuple(sum(w * e for w, e in zip(row, exps)) for row in self.rows)


def add_scaled(h, g, c, mono):
    """In place: h += c * x^mono * g.  Zero coefficients are dropped."""
    for (comp, e), gc in g.items():
        t = (comp, tuple(x + y for x, y in zip(e, mono)))
        v = h.get(t)
        if v is None:
            h[t] = c * gc
        else:
            v = v + c * gc
            if v:
                h[t] = v
            else:
                del h[t]


def reduce_full(f, gens, leads, lcs, order, track=False):
    """Fully reduce ``f`` modulo ``gens`` (global division with remainder).

    ``leads[i]`` and ``lcs[i]`` are the leading module monomial and leading
    coefficient of ``gens[i]`` under ``order``.  Returns ``(remainder,
    cofactors)`` with ``f == sum(cof_i * gens_i) + remainder``; cofactors are
    None unless ``track``.  The reducer with the smallest index wins, so the
    result is deterministic for a fixed generator list.
    """
    h = dict(f)
    rem = {}
    cofs = [dict() for _ in gens] if track else None
    n = len(gens)
    while h:
        lt = order.lead(h)
        comp, exps = lt
        c = h[lt]
        ri = -1
        m = None
        for i in range(n):
            lc_comp, lc_exps = leads[i]
            if lc_comp != comp:
                continue
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
        add_scaled(h, gens[ri], -coef, m)
        h.pop(lt, None)
        if track:
            cd = cofs[ri]
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
