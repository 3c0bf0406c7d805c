"""Weighted bigraded sparse polynomials over the rationals.

A :class:`RingSpec` fixes the variable names, the integer F- and V-weights
(the two gradings), optional rational quasi-homogeneous w-weights (the third
grading that turns "unit entry" into "nonzero constant"), and the monomial
order.  A :class:`Polynomial` is a sparse map from exponent tuples to nonzero
`Fraction` coefficients.  Everything is immutable after construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import orders
from .errors import InhomogeneousError, MissingWeightsError, ZeroPolynomialError


@dataclass(frozen=True)
class Bidegree:
    """An (F, V) degree pair; k may be negative (t contributes -1)."""

    d: int
    k: int

    def __add__(self, other: "Bidegree") -> "Bidegree":
        return Bidegree(self.d + other.d, self.k + other.k)

    def __sub__(self, other: "Bidegree") -> "Bidegree":
        return Bidegree(self.d - other.d, self.k - other.k)

    def as_pair(self) -> tuple[int, int]:
        return (self.d, self.k)

    def __repr__(self) -> str:
        return f"({self.d},{self.k})"


ZERO_BIDEGREE = Bidegree(0, 0)


@dataclass(frozen=True)
class RingSpec:
    """Variable names with per-variable weights and a monomial order."""

    vars: tuple[str, ...]
    f_weights: tuple[int, ...]
    v_weights: tuple[int, ...]
    w_weights: tuple[Fraction, ...] | None = None
    order: orders.MonomialOrder = None  # type: ignore[assignment]

    def __post_init__(self):
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("variable names must be distinct")
        if len(self.f_weights) != len(self.vars) or len(self.v_weights) != len(self.vars):
            raise ValueError("weight vectors must match the variable count")
        if self.w_weights is not None and len(self.w_weights) != len(self.vars):
            raise ValueError("w-weight vector must match the variable count")
        if self.order is None:
            object.__setattr__(self, "order", orders.grevlex(len(self.vars)))
        if self.order.nvars != len(self.vars):
            raise ValueError("order arity must match the variable count")

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def with_order(self, order: orders.MonomialOrder) -> "RingSpec":
        return RingSpec(self.vars, self.f_weights, self.v_weights, self.w_weights, order)

    # --- element constructors -------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.monomial((0,) * self.nvars)

    def constant(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def monomial(self, exps, coef=1) -> "Polynomial":
        coef = Fraction(coef)
        if not coef:
            return self.zero()
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector")
        return Polynomial(self, {exps: coef})

    def from_terms(self, terms: dict[tuple[int, ...], Fraction]) -> "Polynomial":
        clean = {}
        for exps, c in terms.items():
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        return Polynomial(self, clean)

    def parse(self, text: str) -> "Polynomial":
        return _parse_polynomial(self, text)

    # --- gradings of raw monomials ---------------------------------------------

    def mono_bidegree(self, exps) -> Bidegree:
        return Bidegree(
            sum(w * e for w, e in zip(self.f_weights, exps)),
            sum(w * e for w, e in zip(self.v_weights, exps)),
        )

    def mono_wdegree(self, exps) -> Fraction:
        if self.w_weights is None:
            raise MissingWeightsError("ring has no quasi-homogeneous weights")
        return sum((w * e for w, e in zip(self.w_weights, exps)), Fraction(0))

    def __repr__(self) -> str:
        return f"RingSpec({','.join(self.vars)}; order={self.order.name})"


class Polynomial:
    """Sparse exact-rational polynomial over a fixed :class:`RingSpec`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: dict[tuple[int, ...], Fraction]):
        self.ring = ring
        self.terms = terms

    # --- predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (
            len(self.terms) == 1 and not any(next(iter(self.terms)))
        )

    def constant_coeff(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    # --- arithmetic ---------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials over different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                if v is None:
                    out[e] = c1 * c2
                else:
                    v = v + c1 * c2
                    if v:
                        out[e] = v
                    else:
                        del out[e]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(c)
        return Polynomial(self.ring, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def mul_monomial(self, exps, coef=1) -> "Polynomial":
        coef = Fraction(coef)
        if not coef:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {
                tuple(a + b for a, b in zip(e, exps)): c * coef
                for e, c in self.terms.items()
            },
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    # --- leading data -----------------------------------------------------------

    def lead_monomial(self) -> tuple[int, ...]:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        key = self.ring.order.key
        return max(self.terms, key=key)

    def lead_coeff(self) -> Fraction:
        return self.terms[self.lead_monomial()]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self / self.lead_coeff()

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    # --- degrees ---------------------------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def bidegree(self) -> Bidegree:
        return bidegree(self)

    def w_degree(self) -> Fraction:
        return w_degree(self)

    def is_bihomogeneous(self) -> bool:
        try:
            bidegree(self)
            return True
        except InhomogeneousError:
            return False
        except ZeroPolynomialError:
            return True

    def degree_in(self, var_indices) -> int:
        """Max total exponent over the given variable positions."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return max(sum(e[i] for i in var_indices) for e in self.terms)

    # --- calculus / morphisms ----------------------------------------------------

    def diff(self, name: str) -> "Polynomial":
        i = self.ring.index(name)
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * e[i]
        return Polynomial(self.ring, out)

    def cast(self, target: RingSpec) -> "Polynomial":
        """Re-express in a ring that contains (by name) every used variable."""
        pos = {}
        for i, name in enumerate(self.ring.vars):
            if name in target.vars:
                pos[i] = target.index(name)
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            ne = [0] * target.nvars
            for i, exp in enumerate(e):
                if exp == 0:
                    continue
                if i not in pos:
                    raise KeyError(f"variable {self.ring.vars[i]!r} not in target ring")
                ne[pos[i]] = exp
            out[tuple(ne)] = c
        return Polynomial(target, out)

    def substitute(self, target: RingSpec, images: dict[str, "Polynomial"]) -> "Polynomial":
        """Ring morphism: send each variable to its image (default: same name)."""
        var_images = []
        for name in self.ring.vars:
            if name in images:
                var_images.append(images[name])
            else:
                var_images.append(target.var(name))
        out = target.zero()
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, exp in enumerate(e):
                if exp:
                    term = term * var_images[i] ** exp
            out = out + term
        return out

    # --- printing ---------------------------------------------------------------

    def __repr__(self) -> str:
        return self.to_string()

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, exp in zip(self.ring.vars, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            if not factors:
                body = str(abs(c))
            else:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


# --- the three spec operations ---------------------------------------------------


def bidegree(p: Polynomial) -> Bidegree:
    """Common (F, V) bidegree of all terms of a nonzero polynomial."""
    if p.is_zero():
        raise ZeroPolynomialError("bidegree of the zero polynomial")
    deg = None
    for e in p.terms:
        d = p.ring.mono_bidegree(e)
        if deg is None:
            deg = d
        elif d != deg:
            raise InhomogeneousError(f"terms of bidegree {deg} and {d} in {p}")
    return deg


def w_degree(p: Polynomial) -> Fraction:
    """Common quasi-homogeneous w-degree of all terms of a nonzero polynomial."""
    if p.is_zero():
        raise ZeroPolynomialError("w-degree of the zero polynomial")
    deg = None
    for e in p.terms:
        d = p.ring.mono_wdegree(e)
        if deg is None:
            deg = d
        elif d != deg:
            raise InhomogeneousError(f"terms of w-degree {deg} and {d} in {p}")
    return deg


def monomial_compare(a, b, ring: RingSpec) -> int:
    """-1, 0 or +1 comparing two exponent vectors under the ring's order."""
    ka, kb = ring.order.key(tuple(a)), ring.order.key(tuple(b))
    return (ka > kb) - (ka < kb)


# --- text syntax -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(\+)|(-)|(/))")


def _split_vars(ring: RingSpec, run: str) -> list[str]:
    """Greedy longest-prefix split of an identifier run into ring variables."""
    names = sorted(ring.vars, key=len, reverse=True)
    out = []
    rest = run
    while rest:
        for name in names:
            if rest.startswith(name):
                out.append(name)
                rest = rest[len(name):]
                break
        else:
            raise ValueError(f"unknown variable in {run!r}")
    return out


def _parse_polynomial(ring: RingSpec, text: str) -> Polynomial:
    """Parse sums of monomial terms: `x1^3+x2^3`, `t*tau+1/3*x1*xi1`, `-2x y^2`."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"cannot tokenize {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            tokens.append(("num", int(m.group(1))))
        elif m.group(2):
            for name in _split_vars(ring, m.group(2)):
                tokens.append(("var", name))
        elif m.group(3):
            tokens.append(("pow", None))
        elif m.group(4):
            tokens.append(("mul", None))
        elif m.group(5):
            tokens.append(("plus", None))
        elif m.group(6):
            tokens.append(("minus", None))
        elif m.group(7):
            tokens.append(("slash", None))

    result = ring.zero()
    i = 0
    n = len(tokens)
    first = True
    while i < n or first:
        sign = 1
        while i < n and tokens[i][0] in ("plus", "minus"):
            if tokens[i][0] == "minus":
                sign = -sign
            i += 1
        if i >= n:
            if first and n == 0:
                raise ValueError("empty polynomial text")
            break
        first = False
        coef = Fraction(sign)
        exps = [0] * ring.nvars
        expect_factor = True
        while i < n:
            kind, val = tokens[i]
            if kind in ("plus", "minus"):
                break
            if kind == "mul":
                i += 1
                expect_factor = True
                continue
            if kind == "num":
                num = val
                i += 1
                if i < n and tokens[i][0] == "slash":
                    i += 1
                    if i >= n or tokens[i][0] != "num":
                        raise ValueError("expected denominator after '/'")
                    coef *= Fraction(num, tokens[i][1])
                    i += 1
                else:
                    coef *= num
                expect_factor = False
                continue
            if kind == "var":
                j = ring.index(val)
                i += 1
                power = 1
                if i < n and tokens[i][0] == "pow":
                    i += 1
                    if i >= n or tokens[i][0] != "num":
                        raise ValueError("expected integer exponent after '^'")
                    power = tokens[i][1]
                    i += 1
                exps[j] += power
                expect_factor = False
                continue
            raise ValueError(f"unexpected token {kind!r}")
        if expect_factor:
            raise ValueError("dangling operator in polynomial text")
        result = result + ring.monomial(exps, coef)
    return result
