"""Buchberger and Mora engines for ideals and submodules of free modules.

Internally an element of a free module is a "term map": a dict sending
``(component, exponent_tuple)`` to a nonzero Fraction.  The public types wrap
these in :class:`ModuleElement` vectors of :class:`Polynomial`.

The engine tracks cofactors (expressions of basis elements in terms of the
input generators), which is what Schreyer syzygy extraction and chain-map
lifting need.  Syzygies of a Groebner basis are harvested from *all*
same-component S-pairs of the final basis, so they form a Groebner basis of
the syzygy module for the induced Schreyer order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernel as kernel
from . import orders
from .errors import InfiniteDimensionalError, ModeMismatchError
from .ring import Bidegree, Polynomial, RingSpec, ZERO_BIDEGREE

TermMap = dict  # (component, exponents) -> Fraction


@dataclass(frozen=True)
class FreeModuleSpec:
    """A free module R^rank with a bidegree shift per basis vector."""

    ring: RingSpec
    shifts: tuple[Bidegree, ...]

    @property
    def rank(self) -> int:
        return len(self.shifts)

    @staticmethod
    def trivial(ring: RingSpec, rank: int) -> "FreeModuleSpec":
        return FreeModuleSpec(ring, (ZERO_BIDEGREE,) * rank)


class ModuleElement:
    """A vector of polynomials inside an ambient free module."""

    __slots__ = ("ambient", "components")

    def __init__(self, ambient: FreeModuleSpec, components):
        components = tuple(components)
        if len(components) != ambient.rank:
            raise ValueError("component count must equal the ambient rank")
        self.ambient = ambient
        self.components = components

    @property
    def ring(self) -> RingSpec:
        return self.ambient.ring

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.ambient == other.ambient
            and self.components == other.components
        )

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement(
            self.ambient,
            [a - b for a, b in zip(self.components, other.components)],
        )

    def __repr__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.components) + ")"

    def to_terms(self) -> TermMap:
        out = {}
        for c, p in enumerate(self.components):
            for e, v in p.terms.items():
                out[(c, e)] = v
        return out

    def bidegree(self) -> Bidegree:
        """Common shifted bidegree over all nonzero components."""
        deg = None
        for c, p in enumerate(self.components):
            if p.is_zero():
                continue
            d = p.bidegree() + self.ambient.shifts[c]
            if deg is None:
                deg = d
            elif d != deg:
                from .errors import InhomogeneousError

                raise InhomogeneousError(f"components of bidegree {deg} and {d}")
        if deg is None:
            from .errors import ZeroPolynomialError

            raise ZeroPolynomialError("zero module element has no bidegree")
        return deg


def element_from_terms(ambient: FreeModuleSpec, terms: TermMap) -> ModuleElement:
    ring = ambient.ring
    comps = [dict() for _ in range(ambient.rank)]
    for (c, e), v in terms.items():
        comps[c][e] = v
    return ModuleElement(ambient, [Polynomial(ring, d) for d in comps])


def wrap_polynomials(gens, ambient: FreeModuleSpec | None = None):
    """Normalize a list of Polynomial or ModuleElement to ModuleElement."""
    out = []
    for g in gens:
        if isinstance(g, Polynomial):
            amb = ambient or FreeModuleSpec.trivial(g.ring, 1)
            out.append(ModuleElement(amb, [g]))
        else:
            out.append(g)
    if not out:
        raise ValueError("empty generator list")
    amb = out[0].ambient
    if any(e.ambient != amb for e in out):
        raise ValueError("generators live in different ambient modules")
    return out, amb


# --- low-level engine ---------------------------------------------------------------


def _lead_data(terms: TermMap, ko):
    lt = ko.lead(terms)
    return lt, terms[lt]


def _scaled_cof_sub(target: TermMap, cof: TermMap, coef, mono):
    """target -= coef * x^mono * cof, in place (term map over generator indices)."""
    for (c, e), v in cof.items():
        t = (c, kernel.mono_mul(e, mono))
        cur = target.get(t)
        add = -coef * v
        if cur is None:
            target[t] = add
        else:
            cur = cur + add
            if cur:
                target[t] = cur
            else:
                del target[t]


def _spoly(gi, gj, li, lj, ci, cj):
    """Monic S-element of two term maps with same-component leads.

    Returns (h, mi, mj) with h = x^mi gi / ci - x^mj gj / cj.
    """
    lcm = kernel.mono_lcm(li[1], lj[1])
    mi = kernel.mono_div(lcm, li[1])
    mj = kernel.mono_div(lcm, lj[1])
    h: TermMap = {}
    kernel.add_scaled(h, gi, Fraction(1, 1) / ci, mi)
    kernel.add_scaled(h, gj, Fraction(-1, 1) / cj, mj)
    return h, mi, mj


class _Engine:
    """Shared state for one Buchberger run (global mode)."""

    def __init__(self, module_order: orders.ModuleOrder, rank: int, track: bool,
                 strategy: str = "normal"):
        self.order = module_order
        self.ko = kernel.make_kernel_order(module_order)
        self.rank = rank
        self.track = track
        self.strategy = strategy
        self.G: list[TermMap] = []
        self.leads: list[tuple[int, tuple[int, ...]]] = []
        self.lcs: list[Fraction] = []
        self.cofs: list[TermMap] = []  # expression over input indices
        self.sugar: list[int] = []
        self.pairs: set[tuple[int, int]] = set()

    def _total_degree(self, terms: TermMap) -> int:
        return max(sum(e) for (_, e) in terms) if terms else 0

    def reduce(self, h: TermMap, cof: TermMap | None):
        rem, cs = kernel.reduce_full(h, self.G, self.leads, self.lcs, self.ko,
                                     track=self.track)
        if self.track and cof is not None:
            for k, c in enumerate(cs):
                for mono, coef in c.items():
                    _scaled_cof_sub(cof, self.cofs[k], coef, mono)
        return rem

    def add_element(self, terms: TermMap, cof: TermMap | None, sugar: int):
        t = len(self.G)
        lead, lc = _lead_data(terms, self.ko)
        self._update_pairs(lead, t)
        self.G.append(terms)
        self.leads.append(lead)
        self.lcs.append(lc)
        self.sugar.append(sugar)
        if self.track:
            self.cofs.append(cof)

    def _update_pairs(self, lead, t):
        """Gebauer-Moeller style pair update, restricted to same-component pairs.

        The product (coprimality) criterion is only valid for ideals, so it is
        applied for rank-1 ambient modules only.
        """
        comp, mono = lead
        leads = self.leads
        lcm = kernel.mono_lcm
        divides = kernel.mono_divides

        def pair_lcm(i, j):
            return lcm(leads[i][1], leads[j][1])

        kept = set()
        for (i, j) in self.pairs:
            if leads[i][0] == comp and leads[j][0] == comp:
                l_ij = pair_lcm(i, j)
                if (
                    divides(mono, l_ij)
                    and lcm(leads[i][1], mono) != l_ij
                    and lcm(leads[j][1], mono) != l_ij
                ):
                    continue
            kept.add((i, j))
        self.pairs = kept

        cand = [i for i in range(t) if leads[i][0] == comp]
        by_lcm: dict[tuple[int, ...], list[int]] = {}
        for i in cand:
            by_lcm.setdefault(lcm(leads[i][1], mono), []).append(i)
        minimal = []
        for L in sorted(by_lcm, key=self.ko.mono_key):
            if not any(divides(L2, L) for L2 in minimal):
                minimal.append(L)
        for L in minimal:
            members = by_lcm[L]
            if self.rank == 1 and any(
                kernel.mono_mul(leads[i][1], mono) == L for i in members
            ):
                continue  # product criterion (ideals only)
            self.pairs.add((min(members), t))

    def select_pair(self):
        ko = self.ko
        leads = self.leads

        def score(p):
            i, j = p
            L = kernel.mono_lcm(leads[i][1], leads[j][1])
            base = (ko.key(leads[i][0], L), i, j)
            if self.strategy == "sugar":
                mi = kernel.mono_div(L, leads[i][1])
                mj = kernel.mono_div(L, leads[j][1])
                s = max(self.sugar[i] + sum(mi), self.sugar[j] + sum(mj))
                return (s,) + base
            return base

        best = min(self.pairs, key=score)
        self.pairs.discard(best)
        return best

    def load(self, inputs: list[TermMap]):
        """Install elements as an already-known Groebner basis (no S-pairs)."""
        for f in inputs:
            if not f:
                raise ValueError("zero generator passed to Buchberger")
            terms = dict(f)
            lead, lc = _lead_data(terms, self.ko)
            self.G.append(terms)
            self.leads.append(lead)
            self.lcs.append(lc)
            self.sugar.append(self._total_degree(terms))

    def run(self, inputs: list[TermMap]):
        for idx, f in enumerate(inputs):
            if not f:
                raise ValueError("zero generator passed to Buchberger")
            cof = {(idx, (0,) * self.order.ring_order.nvars): Fraction(1)} \
                if self.track else None
            self.add_element(dict(f), cof, self._total_degree(f))
        while self.pairs:
            i, j = self.select_pair()
            h, mi, mj = _spoly(self.G[i], self.G[j], self.leads[i],
                               self.leads[j], self.lcs[i], self.lcs[j])
            cof = None
            if self.track:
                cof = {}
                _scaled_cof_sub(cof, self.cofs[i], Fraction(-1) / self.lcs[i], mi)
                _scaled_cof_sub(cof, self.cofs[j], Fraction(1) / self.lcs[j], mj)
            if not h:
                continue
            sugar = max(self.sugar[i] + sum(mi), self.sugar[j] + sum(mj))
            rem = self.reduce(h, cof)
            if rem:
                self.add_element(rem, cof, sugar)

    def harvest_syzygies(self) -> list[TermMap]:
        """Syzygies of the current basis from all same-component S-pairs.

        By Schreyer's theorem the result is a Groebner basis of the syzygy
        module for the Schreyer order induced by the basis leads.
        """
        out = []
        n = len(self.G)
        for i in range(n):
            for j in range(i + 1, n):
                if self.leads[i][0] != self.leads[j][0]:
                    continue
                h, mi, mj = _spoly(self.G[i], self.G[j], self.leads[i],
                                   self.leads[j], self.lcs[i], self.lcs[j])
                rem, cs = kernel.reduce_full(h, self.G, self.leads, self.lcs,
                                             self.ko, track=True)
                if rem:
                    raise AssertionError("S-pair of a Groebner basis did not reduce to 0")
                syz: TermMap = {(i, mi): Fraction(1) / self.lcs[i]}
                t = (j, mj)
                v = syz.get(t, Fraction(0)) - Fraction(1) / self.lcs[j]
                if v:
                    syz[t] = v
                else:
                    syz.pop(t, None)
                for k, c in enumerate(cs):
                    for mono, coef in c.items():
                        t = (k, mono)
                        v = syz.get(t, Fraction(0)) - coef
                        if v:
                            syz[t] = v
                        else:
                            syz.pop(t, None)
                if syz:
                    out.append(syz)
        induced = orders.induced_schreyer(self.order, self.leads)
        return _trim_schreyer(out, induced), induced


def _trim_schreyer(syzygies: list[TermMap], induced: orders.ModuleOrder) -> list[TermMap]:
    """Keep a minimal Groebner basis of the syzygy module.

    Under the induced Schreyer order the syzygy of pair (i, j), i < j, leads
    with x^(lcm/lm_i) e_i; dropping those divisible by another kept lead keeps
    both the Groebner property and the generating property.
    """
    sko = kernel.make_kernel_order(induced)
    with_leads = []
    for s in syzygies:
        lt = sko.lead(s)
        with_leads.append((sko.key(lt[0], lt[1]), lt, s))
    with_leads.sort(key=lambda t: t[0])
    kept: list[tuple] = []
    kept_syz = []
    for _, lt, s in with_leads:
        if any(c == lt[0] and kernel.mono_divides(m, lt[1]) for (c, m) in kept):
            continue
        kept.append(lt)
        kept_syz.append(s)
    return kept_syz


# --- public Groebner objects ----------------------------------------------------------


@dataclass
class GroebnerBasis:
    """A canonical Groebner (or local standard) basis with cached lead data."""

    elements: list[ModuleElement]
    order: orders.ModuleOrder
    mode: str  # "global" | "local"
    ambient: FreeModuleSpec
    leads: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)

    def __post_init__(self):
        if not self.leads:
            ko = kernel.make_kernel_order(self.order)
            self.leads = [ko.lead(e.to_terms()) for e in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def polynomials(self) -> list[Polynomial]:
        if self.ambient.rank != 1:
            raise ValueError("not an ideal basis")
        return [e.components[0] for e in self.elements]

    def lead_exponents(self) -> list[tuple[int, ...]]:
        return [m for (_, m) in self.leads]


def _default_module_order(ring: RingSpec, mode: str) -> orders.ModuleOrder:
    return orders.ModuleOrder(ring.order, "top")


def _canonicalize(engine: _Engine, ambient: FreeModuleSpec, mode: str) -> GroebnerBasis:
    """Minimal leads, monic, sorted; fully tail-reduced in global mode."""
    ko = engine.ko
    items = sorted(
        zip(engine.G, engine.leads, engine.lcs),
        key=lambda t: ko.key(t[1][0], t[1][1]),
    )
    minimal = []
    for terms, lead, lc in items:
        if any(
            lead[0] == l2[0] and kernel.mono_divides(l2[1], lead[1])
            for (_, l2, _) in minimal
        ):
            continue
        minimal.append((terms, lead, lc))
    gens = [dict(t) for (t, _, _) in minimal]
    leads = [l for (_, l, _) in minimal]
    lcs = [c for (_, _, c) in minimal]
    if mode == "global":
        changed = True
        while changed:
            changed = False
            for i in range(len(gens)):
                others = gens[:i] + gens[i + 1:]
                oleads = leads[:i] + leads[i + 1:]
                olcs = lcs[:i] + lcs[i + 1:]
                rem, _ = kernel.reduce_full(gens[i], others, oleads, olcs, ko)
                if rem != gens[i]:
                    changed = True
                if not rem:
                    del gens[i], leads[i], lcs[i]
                    break
                gens[i] = rem
                leads[i] = ko.lead(rem)
                lcs[i] = rem[leads[i]]
        order_key = [ko.key(l[0], l[1]) for l in leads]
        idx = sorted(range(len(gens)), key=lambda i: order_key[i])
        gens = [gens[i] for i in idx]
        leads = [leads[i] for i in idx]
        lcs = [lcs[i] for i in idx]
    monic = []
    for terms, lc in zip(gens, lcs):
        monic.append({t: v / lc for t, v in terms.items()})
    elements = [element_from_terms(ambient, t) for t in monic]
    return GroebnerBasis(elements, engine.order, mode, ambient, leads=list(leads))


def buchberger(gens, order: orders.ModuleOrder | None = None, mode: str = "global",
               strategy: str = "normal") -> GroebnerBasis:
    """Reduced, canonically sorted Groebner basis of the module the gens generate.

    Deterministic across runs; in global graded mode homogeneous input yields
    homogeneous basis elements.  Termination is guaranteed (Dickson in global
    mode, Mora in local mode).
    """
    elems, ambient = wrap_polynomials(gens)
    elems = [e for e in elems if not e.is_zero()]
    if not elems:
        raise ValueError("all generators are zero")
    ring = ambient.ring
    if order is None:
        order = _default_module_order(ring, mode)
    if mode == "global":
        if not order.is_global:
            raise ModeMismatchError("global mode requires a global order")
        engine = _Engine(order, ambient.rank, track=False, strategy=strategy)
        engine.run([e.to_terms() for e in elems])
        return _canonicalize(engine, ambient, mode)
    if mode == "local":
        if not order.is_local:
            raise ModeMismatchError("local mode requires a local order")
        return _mora_standard_basis(elems, ambient, order)
    raise ValueError(f"unknown mode {mode!r}")


def normal_form(e, basis: GroebnerBasis):
    """Remainder of e on division by the basis (Mora division in local mode)."""
    scalar = isinstance(e, Polynomial)
    if scalar:
        if basis.ambient.rank != 1:
            raise ValueError("polynomial against a module basis of rank > 1")
        elem = ModuleElement(basis.ambient, [e])
    else:
        elem = e
        if elem.ambient.rank != basis.ambient.rank:
            raise ValueError("ambient rank mismatch")
    if elem.ring != basis.ambient.ring:
        raise ValueError("ring mismatch")
    if basis.mode == "local" and not basis.order.is_local:
        raise ModeMismatchError("local basis carries a non-local order")
    if basis.mode == "global" and not basis.order.is_global:
        raise ModeMismatchError("global basis carries a non-global order")
    ko = kernel.make_kernel_order(basis.order)
    G = [g.to_terms() for g in basis.elements]
    leads = basis.leads
    lcs = [G[i][leads[i]] for i in range(len(G))]
    f = elem.to_terms()
    if basis.mode == "global":
        rem, _ = kernel.reduce_full(f, G, leads, lcs, ko)
    else:
        rem = _mora_reduce(f, G, leads, lcs, ko)
    out = element_from_terms(basis.ambient, rem)
    return out.components[0] if scalar else out


def reduce_with_cofactors(e: ModuleElement, basis: GroebnerBasis):
    """Global division with remainder: e = sum(cof_i * g_i) + rem."""
    ko = kernel.make_kernel_order(basis.order)
    G = [g.to_terms() for g in basis.elements]
    leads = basis.leads
    lcs = [G[i][leads[i]] for i in range(len(G))]
    rem, cofs = kernel.reduce_full(e.to_terms(), G, leads, lcs, ko, track=True)
    ring = basis.ambient.ring
    cof_polys = [Polynomial(ring, dict(c)) for c in cofs]
    return element_from_terms(basis.ambient, rem), cof_polys


# --- Mora (local) division -------------------------------------------------------


def _ecart(terms: TermMap, lead) -> int:
    lead_deg = sum(lead[1])
    return max(sum(e) for (_, e) in terms) - lead_deg


def _mora_reduce(f: TermMap, G, leads, lcs, ko) -> TermMap:
    """Mora's ecart-bounded weak normal form (terminating for local orders).

    The leading term of the result is not divisible by any basis lead; tails
    are not reduced (a weak normal form, as local tail reduction need not
    terminate).
    """
    T = list(zip(G, leads, lcs))
    h = dict(f)
    while h:
        lh = ko.lead(h)
        ch = h[lh]
        divisors = [
            (g, lg, cg) for (g, lg, cg) in T
            if lg[0] == lh[0] and kernel.mono_divides(lg[1], lh[1])
        ]
        if not divisors:
            return h
        eh = _ecart(h, lh)
        best = min(divisors, key=lambda t: _ecart(t[0], t[1]))
        if _ecart(best[0], best[1]) > eh:
            T.append((dict(h), lh, ch))
        g, lg, cg = best
        m = kernel.mono_div(lh[1], lg[1])
        kernel.add_scaled(h, g, -ch / cg, m)
        h.pop(lh, None)
    return h


def _mora_standard_basis(elems, ambient, order) -> GroebnerBasis:
    ko = kernel.make_kernel_order(order)
    G = [e.to_terms() for e in elems]
    leads = [ko.lead(g) for g in G]
    lcs = [G[i][leads[i]] for i in range(len(G))]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))
             if leads[i][0] == leads[j][0]}
    while pairs:
        i, j = min(pairs, key=lambda p: (ko.key(leads[p[0]][0],
                   kernel.mono_lcm(leads[p[0]][1], leads[p[1]][1])), p))
        pairs.discard((i, j))
        h, _, _ = _spoly(G[i], G[j], leads[i], leads[j], lcs[i], lcs[j])
        if not h:
            continue
        rem = _mora_reduce(h, G, leads, lcs, ko)
        if rem:
            t = len(G)
            G.append(rem)
            leads.append(ko.lead(rem))
            lcs.append(rem[leads[t]])
            for i2 in range(t):
                if leads[i2][0] == leads[t][0]:
                    pairs.add((i2, t))
    items = sorted(zip(G, leads, lcs), key=lambda t: ko.key(t[1][0], t[1][1]),
                   reverse=True)
    minimal = []
    for terms, lead, lc in items:
        if any(lead[0] == l2[0] and kernel.mono_divides(l2[1], lead[1])
               for (_, l2, _) in minimal):
            continue
        minimal.append((terms, lead, lc))
    elements = [
        element_from_terms(ambient, {t: v / lc for t, v in terms.items()})
        for (terms, lead, lc) in minimal
    ]
    return GroebnerBasis(elements, order, "local", ambient,
                         leads=[l for (_, l, _) in minimal])


# --- syzygies ----------------------------------------------------------------------


def _syzygy_ambient(gens: list[ModuleElement]) -> FreeModuleSpec:
    ring = gens[0].ring
    shifts = []
    for g in gens:
        try:
            shifts.append(g.bidegree())
        except Exception:
            shifts.append(ZERO_BIDEGREE)
    return FreeModuleSpec(ring, tuple(shifts))


def syzygies(gb: GroebnerBasis) -> list[ModuleElement]:
    """Generators of the kernel of e_i -> gb.elements[i] (a Schreyer basis)."""
    engine = _Engine(gb.order, gb.ambient.rank, track=False)
    engine.run([e.to_terms() for e in gb.elements])
    # engine.run re-runs Buchberger, but on a GB every S-pair reduces to zero,
    # so nothing is added and the harvested syzygies refer to gb's elements.
    if len(engine.G) != len(gb.elements):
        raise AssertionError("input to syzygies() was not a Groebner basis")
    raw, _ = engine.harvest_syzygies()
    amb = _syzygy_ambient(gb.elements)
    out = [element_from_terms(amb, s) for s in raw]
    return _sort_elements(out)


def _sort_elements(elems: list[ModuleElement]) -> list[ModuleElement]:
    if not elems:
        return elems
    order = orders.ModuleOrder(elems[0].ring.order, "top")
    ko = kernel.make_kernel_order(order)

    def key(e):
        t = e.to_terms()
        lt = ko.lead(t)
        return ko.key(lt[0], lt[1])

    return sorted(elems, key=key)


def syzygy_generators(gens: list[ModuleElement],
                      order: orders.ModuleOrder | None = None,
                      assume_groebner: bool = False):
    """Generators of the syzygy module of an arbitrary generator list.

    Returns ``(syzygies, next_order)``.  ``next_order`` is the induced
    Schreyer module order for which the returned list is itself a Groebner
    basis — available exactly when the input already was a Groebner basis
    (then an iterated-resolution caller can skip Buchberger at the next
    level); otherwise None.
    """
    ring = gens[0].ring
    rank = gens[0].ambient.rank
    if order is None:
        order = _default_module_order(ring, "global")
    engine = _Engine(order, rank, track=not assume_groebner)
    inputs = [g.to_terms() for g in gens]
    if assume_groebner:
        # the harvest below still verifies every S-pair reduces to zero
        engine.load(inputs)
    else:
        engine.run(inputs)
    raw, induced = engine.harvest_syzygies()
    amb = _syzygy_ambient(gens)
    if len(engine.G) == len(inputs):
        # The basis is exactly the input list: syzygies apply verbatim, and
        # they are a Groebner basis under the induced Schreyer order.
        syz_sorted = _sort_schreyer([element_from_terms(amb, s) for s in raw], induced)
        return syz_sorted, induced

    # General case: convert syzygies of the computed basis G back to the
    # input coordinates, and add the correction columns e_j - X * Y_j.
    cofs = engine.cofs  # G_c = sum_a cofs[c][(a, e)] x^e F_a
    ko = engine.ko
    leads, lcs = engine.leads, engine.lcs
    out_terms: list[TermMap] = []
    for s in raw:
        conv: TermMap = {}
        for (c, e), q in s.items():
            for (a, ea), r in cofs[c].items():
                t = (a, kernel.mono_mul(ea, e))
                v = conv.get(t, Fraction(0)) + q * r
                if v:
                    conv[t] = v
                else:
                    conv.pop(t, None)
        if conv:
            out_terms.append(conv)
    nv = ring.nvars
    for j, f in enumerate(inputs):
        rem, cs = kernel.reduce_full(f, engine.G, leads, lcs, ko, track=True)
        if rem:
            raise AssertionError("generator failed to reduce against its own basis")
        corr: TermMap = {(j, (0,) * nv): Fraction(1)}
        for c, cof_expr in enumerate(cs):
            for mono, coef in cof_expr.items():
                for (a, ea), r in engine.cofs[c].items():
                    t = (a, kernel.mono_mul(ea, mono))
                    v = corr.get(t, Fraction(0)) - coef * r
                    if v:
                        corr[t] = v
                    else:
                        corr.pop(t, None)
        if corr:
            out_terms.append(corr)
    seen = []
    for t in out_terms:
        if t not in seen:
            seen.append(t)
    return _sort_elements([element_from_terms(amb, t) for t in seen]), None


def express_in_terms(gens: list[ModuleElement], targets: list[ModuleElement],
                     order: orders.ModuleOrder | None = None):
    """For each target v, coefficients c with v = sum(c_a * gens_a), else None.

    Used by chain-map lifting: membership plus an explicit witness in terms of
    the *original* generators (not the internal Groebner basis).
    """
    ring = gens[0].ring
    rank = gens[0].ambient.rank
    if order is None:
        order = _default_module_order(ring, "global")
    engine = _Engine(order, rank, track=True)
    engine.run([g.to_terms() for g in gens])
    out = []
    for v in targets:
        if v.is_zero():
            out.append([ring.zero()] * len(gens))
            continue
        rem, cs = kernel.reduce_full(v.to_terms(), engine.G, engine.leads,
                                     engine.lcs, engine.ko, track=True)
        if rem:
            out.append(None)
            continue
        coeff_terms: list[dict] = [dict() for _ in gens]
        for c, expr in enumerate(cs):
            for mono, coef in expr.items():
                for (a, ea), r in engine.cofs[c].items():
                    e = kernel.mono_mul(ea, mono)
                    d = coeff_terms[a]
                    val = d.get(e, Fraction(0)) + coef * r
                    if val:
                        d[e] = val
                    else:
                        d.pop(e, None)
        out.append([Polynomial(ring, d) for d in coeff_terms])
    return out


def _sort_schreyer(elems: list[ModuleElement], induced: orders.ModuleOrder):
    ko = kernel.make_kernel_order(induced)

    def key(e):
        lt = ko.lead(e.to_terms())
        return ko.key(lt[0], lt[1])

    return sorted(elems, key=key)


# --- elimination and staircases ---------------------------------------------------


def eliminate(gens: list[Polynomial], drop_vars) -> list[Polynomial]:
    """Generators of (ideal cap subring without drop_vars) via a block order."""
    if not gens:
        return []
    ring = gens[0].ring
    drop_idx = tuple(sorted(ring.index(v) for v in drop_vars))
    elim_ring = ring.with_order(orders.eliminate_block(ring.nvars, drop_idx))
    cast = [g.cast(elim_ring) for g in gens if not g.is_zero()]
    if not cast:
        return []
    gb = buchberger(cast)
    out = []
    for p in gb.polynomials():
        if all(all(e[i] == 0 for i in drop_idx) for e in p.terms):
            out.append(p.cast(ring))
    return out


def quotient_staircase(gb: GroebnerBasis) -> list[tuple[int, ...]]:
    """Monomials outside the leading-term staircase of an ideal's basis.

    Their count is the vector-space dimension of the quotient (of the local
    ring at the origin in local mode).
    """
    if gb.ambient.rank != 1:
        raise ValueError("staircase is defined for ideals")
    ring = gb.ambient.ring
    n = ring.nvars
    lead_exps = gb.lead_exponents()
    if any(not any(e) for e in lead_exps):
        return []  # the ideal is the whole ring
    bounds = []
    for i in range(n):
        pure = [e[i] for e in lead_exps if all(e[j] == 0 for j in range(n) if j != i)]
        if not pure:
            raise InfiniteDimensionalError(
                f"no pure power of {ring.vars[i]!r} in the leading ideal"
            )
        bounds.append(min(pure))
    out = []

    def rec(i, current):
        if i == n:
            exps = tuple(current)
            if not any(kernel.mono_divides(l, exps) for l in lead_exps):
                out.append(exps)
            return
        for e in range(bounds[i]):
            rec(i + 1, current + [e])

    rec(0, [])
    out.sort(key=ring.order.key)
    return out
