"""Monomial orders on exponent vectors and induced module orders.

Every order is represented by a tuple of integer weight rows; monomials are
compared by the lexicographic order of their weight-row dot products.  This
uniform encoding keeps the comparison kernel simple and lets the compiled
backend work with plain integer matrices.

Conventions:
  * a *global* order has every variable greater than 1 (all columns of the
    matrix are lexicographically positive);
  * a *local* order has 1 greater than every variable (columns negative),
    which is what Mora division requires.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def _grevlex_rows(n: int, weights=None) -> tuple[tuple[int, ...], ...]:
    """Weight rows realizing (weighted) graded reverse lexicographic order."""
    first = tuple(weights) if weights is not None else (1,) * n
    rows = [first]
    for j in range(n - 1, 0, -1):
        row = [0] * n
        row[j] = -1
        rows.append(tuple(row))
    return tuple(rows)


def _grlex_rows(n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,) * n]
    for j in range(n - 1):
        row = [0] * n
        row[j] = 1
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by integer weight rows, compared lexicographically."""

    name: str
    rows: tuple[tuple[int, ...], ...]

    @property
    def nvars(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def key(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(w * e for w, e in zip(row, exps)) for row in self.rows)

    def _column_sign(self, i: int) -> int:
        for row in self.rows:
            if row[i] > 0:
                return 1
            if row[i] < 0:
                return -1
        return 0

    @property
    def is_global(self) -> bool:
        return all(self._column_sign(i) > 0 for i in range(self.nvars))

    @property
    def is_local(self) -> bool:
        return all(self._column_sign(i) < 0 for i in range(self.nvars))

    def __repr__(self) -> str:
        return f"MonomialOrder({self.name!r})"


def grevlex(n: int, weights=None) -> MonomialOrder:
    """Graded reverse lexicographic order, optionally refined by a weight vector.

    With a weight vector, the first comparison key is the weighted degree and
    ties are broken grevlex-style by total degree then reversed exponents.
    """
    if weights is None:
        return MonomialOrder("grevlex", _grevlex_rows(n))
    rows = (tuple(weights),) + _grevlex_rows(n)
    return MonomialOrder("wgrevlex", rows)


def grlex(n: int) -> MonomialOrder:
    """Graded lexicographic order (used to test order-independence)."""
    return MonomialOrder("grlex", _grlex_rows(n))


def eliminate_block(n: int, drop: tuple[int, ...]) -> MonomialOrder:
    """Block order with the ``drop`` variables in the leading block.

    Any polynomial whose leading monomial avoids the drop block lies entirely
    in the subring without the dropped variables, which is what elimination
    needs.
    """
    drop_set = set(drop)
    keep = tuple(i for i in range(n) if i not in drop_set)
    drop_sorted = tuple(i for i in range(n) if i in drop_set)

    def block_rows(idxs):
        rows = [tuple(1 if i in idxs else 0 for i in range(n))]
        for j in reversed(idxs[1:]):
            row = [0] * n
            row[j] = -1
            rows.append(tuple(row))
        return rows

    rows = block_rows(drop_sorted) + block_rows(keep)
    return MonomialOrder("elim", tuple(rows))


def local_ds(n: int) -> MonomialOrder:
    """Local order: smaller total degree first, grevlex-style tie-break.

    1 is greater than every variable, as required for Mora division and
    standard bases at the origin.
    """
    rows = [(-1,) * n]
    for j in range(n - 1, 0, -1):
        row = [0] * n
        row[j] = -1
        rows.append(tuple(row))
    return MonomialOrder("ds", tuple(rows))


@dataclass(frozen=True)
class ModuleOrder:
    """Order on module monomials ``(component, monomial)``.

    kind:
      * ``"top"``      term over position; position ties prefer lower index.
      * ``"pot"``      position over term; lower index is greater.
      * ``"schreyer"`` induced order: compare ``monomial * comp_monos[c]``
        under the ring order, ties by the per-component tuple ``comp_ties[c]``.

    For Schreyer orders induced from other Schreyer orders the accumulated
    lead monomials multiply up and the tie tuples concatenate, so towers of
    induced orders flatten into this one representation exactly.
    """

    ring_order: MonomialOrder
    kind: str = "top"
    comp_monos: tuple[tuple[int, ...], ...] | None = field(default=None)
    comp_ties: tuple[tuple[int, ...], ...] | None = field(default=None)

    def key(self, comp: int, exps: tuple[int, ...]):
        if self.kind == "schreyer":
            shifted = tuple(a + b for a, b in zip(exps, self.comp_monos[comp]))
            return self.ring_order.key(shifted) + self.comp_ties[comp]
        if self.kind == "pot":
            return (-comp,) + self.ring_order.key(exps)
        return self.ring_order.key(exps) + (-comp,)

    @property
    def is_global(self) -> bool:
        return self.ring_order.is_global

    @property
    def is_local(self) -> bool:
        return self.ring_order.is_local


def induced_schreyer(prev: ModuleOrder, leads) -> ModuleOrder:
    """The Schreyer order induced by lead terms ``leads`` over ``prev``.

    ``leads[c]`` is the lead module monomial ``(component, exponents)`` of the
    c-th column of a differential whose source the new order lives on.
    """
    monos = []
    ties = []
    for c, (pc, m) in enumerate(leads):
        if prev.kind == "schreyer":
            monos.append(tuple(a + b for a, b in zip(m, prev.comp_monos[pc])))
            ties.append(prev.comp_ties[pc] + (-c,))
        elif prev.kind == "top":
            monos.append(tuple(m))
            ties.append((-pc, -c))
        else:
            raise NotImplementedError("Schreyer order over a POT order")
    return ModuleOrder(prev.ring_order, "schreyer", tuple(monos), tuple(ties))
