"""Exact multivariate Laurent polynomials with integer coefficients.

A polynomial is a finite map from exponent vectors (one slot per ring
variable, any sign) to nonzero Python ints; all arithmetic is exact and
arbitrary precision.  The canonical term order is lexicographic on exponent
vectors, ascending for serialization and descending for division leading
terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class InexactDivision(ArithmeticError):
    """Laurent division left a nonzero remainder."""


@dataclass(frozen=True)
class PolyRing:
    """Named variable slots shared by a family of polynomials."""

    names: tuple[str, ...]

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return LaurentPoly(self, {(0,) * self.nvars: 1})

    def gen(self, i: int) -> "LaurentPoly":
        return self.monomial({i: 1})

    def monomial(self, exps: Mapping[int, int] | Sequence[int], coef: int = 1) -> "LaurentPoly":
        if isinstance(exps, Mapping):
            vec = [0] * self.nvars
            for slot, e in exps.items():
                vec[slot] = e
            key = tuple(vec)
        else:
            key = tuple(exps)
        if len(key) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        return LaurentPoly(self, {key: coef} if coef else {})

    def index(self, name: str) -> int:
        return self.names.index(name)


class LaurentPoly:
    """Immutable exact Laurent polynomial over a :class:`PolyRing`."""

    __slots__ = ("ring", "terms", "_key")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._key = None

    # -- canonical form -------------------------------------------------------

    def key(self) -> tuple:
        """Sorted (exponent, coefficient) pairs; the canonical form and sort key."""
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"<LaurentPoly {self}>"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for exps, coef in self.key():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(coef))
            elif coef == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{coef}*" + "*".join(factors))
        return "+".join(parts)

    # -- structure --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.ring.nvars: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monomial_exps(self) -> tuple[int, ...]:
        (exps,) = self.terms
        return exps

    def constant_coefficient(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def min_exponent(self, slot: int) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return min(e[slot] for e in self.terms)

    def degrees(self, slot_degrees: Sequence[Sequence[int]]) -> set[tuple[int, ...]]:
        """Multi-degrees of all terms under the given per-slot degree vectors."""
        dim = len(slot_degrees[0]) if slot_degrees else 0
        out = set()
        for exps in self.terms:
            deg = [0] * dim
            for e, vec in zip(exps, slot_degrees):
                if e:
                    for k in range(dim):
                        deg[k] += e * vec[k]
            out.add(tuple(deg))
        return out

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for exps, coef in other.terms.items():
            c = out.get(exps, 0) + coef
            if c:
                out[exps] = c
            else:
                out.pop(exps, None)
        return LaurentPoly(self.ring, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        out: dict = {}
        get = out.get
        items = list(b.terms.items())
        for ea, ca in a.terms.items():
            for eb, cb in items:
                key = tuple(map(int.__add__, ea, eb))
                c = get(key, 0) + ca * cb
                if c:
                    out[key] = c
                else:
                    del out[key]
        return LaurentPoly(self.ring, out)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise InexactDivision("negative power of a non-monomial")
            exps = self.monomial_exps()
            coef = self.terms[exps]
            if abs(coef) != 1:
                raise InexactDivision("negative power of a non-unit coefficient")
            return LaurentPoly(self.ring, {tuple(e * k for e in exps): coef ** (k & 1 or 2)})
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, delta: Sequence[int]) -> "LaurentPoly":
        delta = tuple(delta)
        return LaurentPoly(
            self.ring, {tuple(map(int.__add__, e, delta)): c for e, c in self.terms.items()}
        )

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact Laurent division; raises :class:`InexactDivision` otherwise.

        Both operands are shifted into the polynomial range, then reduced by
        leading-term elimination against the single divisor; with a single
        divisor this detects divisibility exactly.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        nv = self.ring.nvars
        if divisor.is_monomial():
            dexps = divisor.monomial_exps()
            dcoef = divisor.terms[dexps]
            out = {}
            for e, c in self.terms.items():
                if c % dcoef:
                    raise InexactDivision("coefficient not divisible")
                out[tuple(map(int.__sub__, e, dexps))] = c // dcoef
            return LaurentPoly(self.ring, out)
        shift_p = tuple(-min(e[s] for e in self.terms) for s in range(nv))
        shift_q = tuple(-min(e[s] for e in divisor.terms) for s in range(nv))
        rem = {tuple(map(int.__add__, e, shift_p)): c for e, c in self.terms.items()}
        q_items = [(tuple(map(int.__add__, e, shift_q)), c) for e, c in divisor.terms.items()]
        q_lead = max(e for e, _ in q_items)
        q_lc = dict(q_items)[q_lead]
        quotient: dict = {}
        while rem:
            r_lead = max(rem)
            r_lc = rem[r_lead]
            mono = tuple(map(int.__sub__, r_lead, q_lead))
            if any(x < 0 for x in mono) or r_lc % q_lc:
                raise InexactDivision("nonzero remainder")
            co = r_lc // q_lc
            quotient[mono] = co
            for qe, qc in q_items:
                key = tuple(map(int.__add__, qe, mono))
                c = rem.get(key, 0) - co * qc
                if c:
                    rem[key] = c
                else:
                    rem.pop(key, None)
        back = tuple(q - p for p, q in zip(shift_p, shift_q))
        return LaurentPoly(
            self.ring, {tuple(map(int.__add__, e, back)): c for e, c in quotient.items()}
        )

    # -- reinterpretation -----------------------------------------------------------

    def project(self, keep: Sequence[int], ring: PolyRing) -> "LaurentPoly":
        """Set every dropped slot to 1 and reindex the kept slots into ``ring``."""
        if len(keep) != ring.nvars:
            raise ValueError("kept slot count must match target ring")
        out: dict = {}
        for exps, coef in self.terms.items():
            key = tuple(exps[s] for s in keep)
            c = out.get(key, 0) + coef
            if c:
                out[key] = c
            else:
                out.pop(key, None)
        return LaurentPoly(ring, out)

    def evaluate(self, values: Sequence["LaurentPoly"], ring: PolyRing) -> "LaurentPoly":
        """Substitute one polynomial value per slot.

        Negative exponents are only legal on slots whose value is a unit
        monomial.
        """
        total = ring.zero()
        for exps, coef in self.terms.items():
            term = ring.monomial((0,) * ring.nvars, coef)
            for e, val in zip(exps, values):
                if e:
                    term = term * val ** e
            total = total + term
        return total


def poly_sum(ring: PolyRing, polys: Iterable[LaurentPoly]) -> LaurentPoly:
    total = ring.zero()
    for p in polys:
        total = total + p
    return total
