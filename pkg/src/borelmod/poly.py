"""Exact sparse multivariate polynomials over the rationals.

Two variable families are used throughout: orbit parameters a1, a2, ... and
group parameters t1, t2, ...  Monomials are stored sparsely as sorted tuples
of (variable id, exponent) pairs; coefficients are Python ints or Fractions.
Structural equality of the canonical form coincides with mathematical
equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

PARAM = "a"
GROUP = "t"

# internal variable ids: params occupy 1..998, the scratch unknown is 999,
# group variables start at 1001
_SCRATCH_ID = 999
_GROUP_BASE = 1000


class BadCharacteristicError(ArithmeticError):
    """A coefficient denominator is not invertible modulo the chosen prime."""


@dataclass(frozen=True)
class Var:
    family: str
    index: int

    def __post_init__(self):
        if self.family not in (PARAM, GROUP, "c") or self.index < 0:
            raise ValueError(f"bad variable {self.family}{self.index}")

    @property
    def vid(self) -> int:
        if self.family == PARAM:
            return self.index
        if self.family == "c":
            return _SCRATCH_ID
        return _GROUP_BASE + self.index

    @classmethod
    def param(cls, k: int) -> "Var":
        return cls(PARAM, k)

    @classmethod
    def group(cls, j: int) -> "Var":
        return cls(GROUP, j)

    @classmethod
    def scratch(cls) -> "Var":
        return cls("c", 0)

    @classmethod
    def from_vid(cls, vid: int) -> "Var":
        if vid == _SCRATCH_ID:
            return cls("c", 0)
        if vid >= _GROUP_BASE:
            return cls(GROUP, vid - _GROUP_BASE)
        return cls(PARAM, vid)

    def __str__(self) -> str:
        return "c" if self.family == "c" else f"{self.family}{self.index}"


def _vid_name(vid: int) -> str:
    return str(Var.from_vid(vid))


def _is_group_vid(vid: int) -> bool:
    return vid >= _GROUP_BASE


def _norm_coef(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class MultiPoly:
    """Immutable sparse polynomial; do not mutate the wrapped term dict."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = terms or {}

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return _ZERO

    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = _norm_coef(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        return cls({(): c}) if c else cls({})

    @classmethod
    def variable(cls, v: Var) -> "MultiPoly":
        return cls({((v.vid, 1),): 1})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = _norm_coef(s)
            else:
                out.pop(mono, None)
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        if not self.terms or not other.terms:
            return _ZERO
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = _norm_coef(s)
                else:
                    out.pop(m, None)
        return MultiPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = _norm_coef(c if isinstance(c, (int, Fraction)) else Fraction(c))
        if not c:
            return _ZERO
        if c == 1:
            return self
        return MultiPoly({m: _norm_coef(v * c) for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()})"

    # -- structure queries --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        if not self.terms:
            return 0
        return self.terms.get(())

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in m) for m in self.terms)

    def degree_in(self, v: Var) -> int:
        vid = v.vid
        best = 0
        for m in self.terms:
            for w, e in m:
                if w == vid and e > best:
                    best = e
        return best

    def variables(self) -> set[Var]:
        out = set()
        for m in self.terms:
            for vid, _ in m:
                out.add(Var.from_vid(vid))
        return out

    def group_vids(self) -> set[int]:
        return {vid for m in self.terms for vid, _ in m if _is_group_vid(vid)}

    def has_group_vars(self) -> bool:
        return any(_is_group_vid(vid) for m in self.terms for vid, _ in m)

    def contains(self, v: Var) -> bool:
        vid = v.vid
        return any(w == vid for m in self.terms for w, _ in m)

    def num_terms(self) -> int:
        return len(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- the pivot step ------------------------------------------------------

    def linear_decompose(self, v: Var):
        """Split p = kappa*v + rho when deg_v(p) <= 1, else None.

        kappa and rho are free of v; rho may involve any other variable.
        """
        vid = v.vid
        kap: dict = {}
        rho: dict = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, x in m:
                if w == vid:
                    e = x
                else:
                    rest.append((w, x))
            if e == 0:
                rho[m] = c
            elif e == 1:
                kap[tuple(rest)] = c
            else:
                return None
        return MultiPoly(kap), MultiPoly(rho)

    # -- substitution ----------------------------------------------------------

    def substitute(self, v: Var, value: "MultiPoly") -> "MultiPoly":
        """Polynomial substitution v := value."""
        vid = v.vid
        out = _ZERO
        powers = {0: MultiPoly.const(1)}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, x in m:
                if w == vid:
                    e = x
                else:
                    rest.append((w, x))
            if e not in powers:
                powers[e] = value ** e
            out = out + powers[e] * MultiPoly({tuple(rest): c})
        return out

    def substitute_rational(self, v: Var, num: "MultiPoly", den: "MultiPoly"):
        """Substitute v := num/den and clear denominators.

        Returns (result, k) with den^k * p(v := num/den) == result and
        k = deg_v(p).  num and den must not contain v.
        """
        if den.is_zero():
            raise ZeroDivisionError("denominator is identically zero")
        if num.contains(v) or den.contains(v):
            raise ValueError("substituted value may not contain the variable")
        k = self.degree_in(v)
        if k == 0:
            return self, 0
        vid = v.vid
        num_pow = {0: MultiPoly.const(1)}
        den_pow = {0: MultiPoly.const(1)}

        def pw(table, base, e):
            if e not in table:
                table[e] = base ** e
            return table[e]

        out = _ZERO
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, x in m:
                if w == vid:
                    e = x
                else:
                    rest.append((w, x))
            piece = pw(num_pow, num, e) * pw(den_pow, den, k - e)
            out = out + piece * MultiPoly({tuple(rest): c})
        return out, k

    # -- evaluation ---------------------------------------------------------------

    def eval_mod(self, assignment: dict[Var, int], q: int) -> int:
        """Evaluate in F_q; assignment must cover every variable."""
        vals = {v.vid: a % q for v, a in assignment.items()}
        total = 0
        for m, c in self.terms.items():
            if isinstance(c, Fraction):
                den = c.denominator % q
                if den == 0:
                    raise BadCharacteristicError(
                        f"coefficient denominator {c.denominator} vanishes mod {q}")
                cv = c.numerator * pow(den, q - 2, q)
            else:
                cv = c
            term = cv % q
            for vid, e in m:
                if vid not in vals:
                    raise KeyError(f"no value for {_vid_name(vid)}")
                term = term * pow(vals[vid], e, q) % q
            total = (total + term) % q
        return total

    def eval_exact(self, assignment: dict[Var, object]):
        """Exact evaluation at rational points (used by randomized tests)."""
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for vid, e in m:
                term *= Fraction(assignment[Var.from_vid(vid)]) ** e
            total += term
        return _norm_coef(total)

    # -- normal forms -------------------------------------------------------------

    def content_and_primitive(self):
        """(content, primitive): content*primitive == self, primitive has
        coprime integer coefficients and positive leading coefficient."""
        if not self.terms:
            return Fraction(0), _ZERO
        denom = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                denom = denom * c.denominator // gcd(denom, c.denominator)
        nums = [int(c * denom) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, abs(v))
        lead = self.terms[self.leading_monomial()]
        sign = -1 if lead < 0 else 1
        content = Fraction(sign * g, denom)
        prim = MultiPoly({m: int(Fraction(c) / content) for m, c in self.terms.items()})
        return content, prim

    def primitive(self) -> "MultiPoly":
        return self.content_and_primitive()[1]

    def leading_monomial(self):
        return max(self.terms, key=_mono_key)

    def try_divide(self, divisor: "MultiPoly"):
        """Exact division self / divisor, or None when not divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError
        rem = self
        out = _ZERO
        dlm = divisor.leading_monomial()
        dlc = divisor.terms[dlm]
        while rem.terms:
            rlm = rem.leading_monomial()
            q = _mono_div(rlm, dlm)
            if q is None:
                return None
            coef = _norm_coef(Fraction(rem.terms[rlm]) / Fraction(dlc))
            piece = MultiPoly({q: coef})
            out = out + piece
            rem = rem - piece * divisor
        return out

    # -- rendering ---------------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_mono_key, reverse=True):
            c = self.terms[m]
            factors = [f"{_vid_name(vid)}^{e}" if e > 1 else _vid_name(vid)
                       for vid, e in sorted(m)]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for w, e in m2:
        d[w] = d.get(w, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(m1, m2):
    d = dict(m1)
    for w, e in m2:
        r = d.get(w, 0) - e
        if r < 0:
            return None
        if r == 0:
            d.pop(w, None)
        else:
            d[w] = r
    return tuple(sorted(d.items()))


def _mono_key(m):
    return (sum(e for _, e in m), m)


_ZERO = MultiPoly({})

EQ = "eq"
NEQ = "neq"


@dataclass(frozen=True)
class Constraint:
    kind: str
    poly: MultiPoly

    def __post_init__(self):
        if self.kind not in (EQ, NEQ):
            raise ValueError(f"bad constraint kind {self.kind}")

    def render(self) -> str:
        op = "=" if self.kind == EQ else "!="
        return f"{self.poly.render()} {op} 0"


# -- parsing of the canonical rendering ----------------------------------------

_TOKEN = re.compile(r"\s*([a-z]\d*|\d+|\^|\*|/|\+|-|\(|\))")


def parse_poly(text: str) -> MultiPoly:
    """Parse the grammar produced by MultiPoly.render (plus parentheses)."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    out, rest = _parse_sum(tokens)
    if rest:
        raise ValueError(f"trailing tokens {rest!r}")
    return out


def _parse_sum(toks):
    sign = 1
    if toks and toks[0] in "+-":
        sign = -1 if toks[0] == "-" else 1
        toks = toks[1:]
    acc, toks = _parse_product(toks)
    acc = acc.scale(sign)
    while toks and toks[0] in "+-":
        sign = -1 if toks[0] == "-" else 1
        term, toks = _parse_product(toks[1:])
        acc = acc + term.scale(sign)
    return acc, toks


def _parse_product(toks):
    acc, toks = _parse_factor(toks)
    while toks and toks[0] in ("*", "/"):
        op = toks[0]
        nxt, toks = _parse_factor(toks[1:])
        if op == "*":
            acc = acc * nxt
        else:
            if not nxt.is_constant() or nxt.is_zero():
                raise ValueError("division only by nonzero constants")
            acc = acc.scale(Fraction(1, 1) / Fraction(nxt.constant_value()))
    return acc, toks


def _parse_factor(toks):
    if not toks:
        raise ValueError("unexpected end of input")
    tok, rest = toks[0], toks[1:]
    if tok == "(":
        inner, rest = _parse_sum(rest)
        if not rest or rest[0] != ")":
            raise ValueError("unbalanced parentheses")
        base = inner
        rest = rest[1:]
    elif tok.isdigit():
        base = MultiPoly.const(int(tok))
    elif tok == "c":
        base = MultiPoly.variable(Var.scratch())
    elif tok[0] in (PARAM, GROUP) and tok[1:].isdigit():
        base = MultiPoly.variable(Var(tok[0], int(tok[1:])))
    else:
        raise ValueError(f"unexpected token {tok!r}")
    if rest and rest[0] == "^":
        if len(rest) < 2 or not rest[1].isdigit():
            raise ValueError("bad exponent")
        base = base ** int(rest[1])
        rest = rest[2:]
    return base, rest
