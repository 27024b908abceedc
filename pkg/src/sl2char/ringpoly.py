"""Sparse multivariate polynomials with exact coefficients over Z or a prime field.

Coefficients are arbitrary-precision integers (char 0) or canonical residues
in [0, p) (char p).  Every polynomial carries its ring: a characteristic, an
ordered variable tuple and a monomial order.  Values are immutable after
construction and safe to share between threads; the only global mutable state
is the append-only variable intern table.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass
from functools import reduce as _fold


class RingError(Exception):
    """Structural misuse: mixed rings, unknown variables, bad orders."""


class DomainError(Exception):
    """Mathematically invalid input: composite modulus, zero polynomial, ..."""


# ---------------------------------------------------------------------------
# variable intern table (append-only, synchronized)

_INTERN_LOCK = threading.Lock()
_VAR_IDS: dict[str, int] = {}
_VAR_NAMES: list[str] = []

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def intern_variable(name: str) -> int:
    """Return the global id of `name`, interning it on first use."""
    vid = _VAR_IDS.get(name)
    if vid is not None:
        return vid
    if not _NAME_RE.match(name):
        raise RingError(f"invalid variable name {name!r}")
    with _INTERN_LOCK:
        vid = _VAR_IDS.get(name)
        if vid is None:
            vid = len(_VAR_NAMES)
            _VAR_NAMES.append(name)
            _VAR_IDS[name] = vid
        return vid


# ---------------------------------------------------------------------------
# deterministic primality (Miller-Rabin with a witness set proven complete
# below 2^64; larger moduli are rejected, there is no use case for them)

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_characteristic(char: int) -> int:
    if char == 0:
        return 0
    if char >= 1 << 64:
        raise DomainError("moduli >= 2^64 are not supported")
    if not is_prime(char):
        raise DomainError(f"characteristic {char} is not prime")
    return char


# ---------------------------------------------------------------------------
# monomial orders

LEX = "lex"
GREVLEX = "grevlex"
ELIM1 = "elim1"  # internal: block order ({first var}) x grevlex(rest)


@dataclass(frozen=True)
class MonomialOrder:
    """A total monomial order over a variable precedence (highest first).

    `lex` and `grevlex` are the public kinds; lex with a stated precedence is
    the elimination order used throughout the ideal machinery.  `elim1` is an
    internal product order (degree in the first variable, then grevlex on the
    rest) used to stage multi-variable eliminations one variable at a time.
    """

    kind: str
    variables: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in (LEX, GREVLEX, ELIM1):
            raise RingError(f"unknown monomial order {self.kind!r}")
        if len(set(self.variables)) != len(self.variables):
            raise RingError("duplicate variables in order")
        for v in self.variables:
            intern_variable(v)

    def key(self, exps: tuple[int, ...]):
        """Sort key: larger key = larger monomial."""
        if self.kind == LEX:
            return exps
        if self.kind == GREVLEX:
            return (sum(exps), tuple(-e for e in reversed(exps)))
        rest = exps[1:]
        return (exps[0], sum(rest), tuple(-e for e in reversed(rest)))


@dataclass(frozen=True)
class Coeff:
    """A coefficient together with its characteristic."""

    value: int
    char: int

    def __post_init__(self):
        check_characteristic(self.char)
        if self.char and not 0 <= self.value < self.char:
            raise DomainError("coefficient not reduced into [0, p)")


class Monomial:
    """Sparse exponent view of a monomial: variables with exponent 0 omitted."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: dict[str, int]):
        self.exponents = {v: e for v, e in exponents.items() if e}

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(frozenset(self.exponents.items()))

    def __repr__(self):
        return f"Monomial({self.exponents!r})"


# ---------------------------------------------------------------------------
# rings

_RING_CACHE: dict[tuple, "PolyRing"] = {}
_RING_LOCK = threading.Lock()


def ring(char: int, variables, kind: str = LEX) -> "PolyRing":
    """Return the (cached) polynomial ring over the given data."""
    variables = tuple(variables)
    key = (char, variables, kind)
    r = _RING_CACHE.get(key)
    if r is None:
        with _RING_LOCK:
            r = _RING_CACHE.get(key)
            if r is None:
                r = PolyRing(char, MonomialOrder(kind, variables))
                _RING_CACHE[key] = r
    return r


class PolyRing:
    """Z[vars] or F_p[vars] with an attached monomial order.

    Construct through :func:`ring` so equal rings are identical objects.
    """

    def __init__(self, char: int, order: MonomialOrder):
        self.char = check_characteristic(char)
        self.order = order
        self.variables = order.variables
        self.nvars = len(order.variables)
        self.index = {v: i for i, v in enumerate(order.variables)}
        self._zero_mono = (0,) * self.nvars
        self._key_cache: dict[tuple[int, ...], tuple] = {}

    def key(self, exps: tuple[int, ...]):
        """Memoized order key (hot path for reduction and selection)."""
        k = self._key_cache.get(exps)
        if k is None:
            k = self.order.key(exps)
            self._key_cache[exps] = k
        return k

    # -- constructors -------------------------------------------------------
    def poly(self, terms: dict[tuple[int, ...], int]) -> "MultiPoly":
        p = self.char
        if p:
            terms = {m: c % p for m, c in terms.items()}
        return MultiPoly(self, {m: c for m, c in terms.items() if c})

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def const(self, c: int) -> "MultiPoly":
        return self.poly({self._zero_mono: c})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def var(self, name: str) -> "MultiPoly":
        if name not in self.index:
            raise RingError(f"variable {name!r} not in ring")
        mono = tuple(1 if v == name else 0 for v in self.variables)
        return self.poly({mono: 1})

    def gens(self) -> list["MultiPoly"]:
        return [self.var(v) for v in self.variables]

    def with_char(self, char: int) -> "PolyRing":
        return ring(char, self.variables, self.order.kind)

    def with_kind(self, kind: str) -> "PolyRing":
        return ring(self.char, self.variables, kind)

    def monomial(self, mono: tuple[int, ...]) -> Monomial:
        return Monomial({v: e for v, e in zip(self.variables, mono)})

    def __repr__(self):
        coeffs = "Z" if self.char == 0 else f"F{self.char}"
        return f"PolyRing({coeffs}[{','.join(self.variables)}], {self.order.kind})"

    # -- parsing ------------------------------------------------------------
    _TERM_RE = re.compile(
        r"\s*([+-])?\s*((?:\d+|[A-Za-z_][A-Za-z0-9_]*(?:\^\d+)?)"
        r"(?:\s*\*\s*(?:\d+|[A-Za-z_][A-Za-z0-9_]*(?:\^\d+)?))*)"
    )

    def parse(self, text: str) -> "MultiPoly":
        """Parse the canonical text form, e.g. ``2*s^8-10*s^6+18*s^4-12*s^2+1``."""
        text = text.strip()
        if not text:
            raise DomainError("empty polynomial text")
        if text == "0":
            return self.zero()
        terms: dict[tuple[int, ...], int] = {}
        pos = 0
        first = True
        while pos < len(text):
            m = self._TERM_RE.match(text, pos)
            if not m or not m.group(2):
                raise DomainError(f"cannot parse polynomial at {text[pos:pos + 20]!r}")
            sign, body = m.group(1), m.group(2)
            if sign is None and not first:
                raise DomainError(f"missing sign before {body!r}")
            coeff = -1 if sign == "-" else 1
            exps = [0] * self.nvars
            for factor in re.split(r"\s*\*\s*", body):
                if factor[0].isdigit():
                    coeff *= int(factor)
                else:
                    name, _, e = factor.partition("^")
                    if name not in self.index:
                        raise RingError(f"variable {name!r} not in ring")
                    exps[self.index[name]] += int(e) if e else 1
            mono = tuple(exps)
            terms[mono] = terms.get(mono, 0) + coeff
            pos = m.end()
            first = False
        return self.poly(terms)


class MultiPoly:
    """Immutable sparse polynomial; build through PolyRing methods."""

    __slots__ = ("ring", "terms", "_sorted", "_hash", "_lm")

    def __init__(self, ring_: PolyRing, terms: dict[tuple[int, ...], int]):
        self.ring = ring_
        self.terms = terms
        self._sorted = None
        self._hash = None
        self._lm = None

    # -- basics -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_mono in self.terms)

    def constant_value(self) -> int:
        return self.terms.get(self.ring._zero_mono, 0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in strictly descending monomial order."""
        if self._sorted is None:
            key = self.ring.key
            self._sorted = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def iter_terms(self):
        """Yield (Monomial, Coeff) pairs in descending order."""
        r = self.ring
        for mono, c in self.sorted_terms():
            yield r.monomial(mono), Coeff(c, r.char)

    def leading_monomial(self) -> tuple[int, ...]:
        if not self.terms:
            raise DomainError("zero polynomial has no leading monomial")
        if self._lm is None:
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.ring.index[name]
        return max(m[i] for m in self.terms)

    def support_variables(self) -> tuple[str, ...]:
        """Variables occurring with positive exponent, in precedence order."""
        used = [False] * self.ring.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring.variables, used) if u)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring:
                raise RingError("mixed rings in arithmetic")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        p = self.ring.char
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if p:
                v %= p
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.char
        if p:
            return MultiPoly(self.ring, {m: (-c) % p for m, c in self.terms.items()})
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        p = self.ring.char
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale_monomial(self, coeff: int, mono: tuple[int, ...]) -> "MultiPoly":
        """Return coeff * x^mono * self."""
        p = self.ring.char
        out = {}
        for m, c in self.terms.items():
            v = c * coeff
            if p:
                v %= p
            if v:
                out[tuple(x + y for x, y in zip(m, mono))] = v
        return MultiPoly(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.constant_value() == (
                other % self.ring.char if self.ring.char else other)
        return (isinstance(other, MultiPoly) and self.ring is other.ring
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.ring), frozenset(self.terms.items())))
        return self._hash

    # -- mapping ------------------------------------------------------------
    def evaluate(self, values: dict[str, object], from_int=None):
        """Evaluate at a point.  Values may live in any commutative ring;
        `from_int` coerces integer coefficients into it (default: identity)."""
        if from_int is None:
            from_int = lambda c: c
        idx = self.ring.index
        vals = [None] * self.ring.nvars
        for name, v in values.items():
            vals[idx[name]] = v
        for i, v in enumerate(vals):
            if v is None and any(m[i] for m in self.terms):
                raise DomainError(f"no value for variable {self.ring.variables[i]!r}")
        total = None
        for m, c in self.sorted_terms():
            term = from_int(c)
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * vals[i]
            total = term if total is None else total + term
        return from_int(0) if total is None else total

    def map_ring(self, target: PolyRing) -> "MultiPoly":
        """Re-express in `target`, which must contain all used variables."""
        src = self.ring.variables
        perm = []
        for v in src:
            perm.append(target.index.get(v, -1))
        out: dict[tuple[int, ...], int] = {}
        for m, c in self.terms.items():
            exps = [0] * target.nvars
            for i, e in enumerate(m):
                if e:
                    j = perm[i]
                    if j < 0:
                        raise RingError(f"variable {src[i]!r} missing from target ring")
                    exps[j] = e
            out[tuple(exps)] = out.get(tuple(exps), 0) + c
        return target.poly(out)

    # -- text ---------------------------------------------------------------
    def text(self) -> str:
        """Canonical text form, terms in descending attached order."""
        if not self.terms:
            return "0"
        vars_ = self.ring.variables
        parts = []
        for mono, c in self.sorted_terms():
            factors = [f"{v}^{e}" if e > 1 else v for v, e in zip(vars_, mono) if e]
            if self.ring.char == 0 and c < 0:
                sign, mag = "-", -c
            else:
                sign, mag = "+", c
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(sign + body)
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"<{self.text()} over {self.ring!r}>"


# ---------------------------------------------------------------------------
# spec-level operations


def arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    """Exact ring arithmetic; `op` is one of add, sub, mul."""
    if not isinstance(q, MultiPoly) or p.ring is not q.ring:
        raise RingError("operands must share one ring")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise DomainError(f"unknown op {op!r}")


def reduce_mod_p(p: MultiPoly, prime: int) -> MultiPoly:
    """Reduce an integer polynomial modulo a prime, dropping killed terms."""
    if p.ring.char != 0:
        raise DomainError("reduce_mod_p expects a characteristic-0 polynomial")
    if not is_prime(prime):
        raise DomainError(f"{prime} is not prime")
    return p.map_ring(p.ring.with_char(prime))


def partial_derivative(p: MultiPoly, name: str) -> MultiPoly:
    """Formal derivative; in char p the derivative of x^p is 0."""
    i = p.ring.index.get(name)
    if i is None:
        raise RingError(f"variable {name!r} not in ring")
    out: dict[tuple[int, ...], int] = {}
    for m, c in p.terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return p.ring.poly(out)


def content_primitive(p: MultiPoly) -> tuple[int, MultiPoly]:
    """(content, primitive part); sign fixed so the leading coefficient is
    positive (monic over F_p)."""
    if not p.terms:
        raise DomainError("zero polynomial has no content")
    char = p.ring.char
    if char:
        lc = p.leading_coefficient()
        inv = pow(lc, char - 2, char)
        return 1, MultiPoly(p.ring, {m: c * inv % char for m, c in p.terms.items()})
    g = 0
    for c in p.terms.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    if p.leading_coefficient() < 0:
        g = -g
    prim = MultiPoly(p.ring, {m: c // g for m, c in p.terms.items()})
    return abs(g), prim


def exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Exact polynomial division p / q; raises DomainError if not exact."""
    if q.is_zero():
        raise DomainError("division by zero polynomial")
    if p.ring is not q.ring:
        raise RingError("mixed rings in division")
    ring_ = p.ring
    char = ring_.char
    qlm = q.leading_monomial()
    qlc = q.terms[qlm]
    qinv = pow(qlc, char - 2, char) if char else None
    rem = dict(p.terms)
    quot: dict[tuple[int, ...], int] = {}
    key = ring_.key
    while rem:
        lm = max(rem, key=key)
        lc = rem[lm]
        mono = tuple(a - b for a, b in zip(lm, qlm))
        if any(e < 0 for e in mono):
            raise DomainError("division not exact")
        if char:
            c = lc * qinv % char
        else:
            if lc % qlc:
                raise DomainError("division not exact")
            c = lc // qlc
        quot[mono] = c
        for m2, c2 in q.terms.items():
            m = tuple(x + y for x, y in zip(mono, m2))
            v = rem.get(m, 0) - c * c2
            if char:
                v %= char
            if v:
                rem[m] = v
            elif m in rem:
                del rem[m]
    return ring_.poly(quot)


def divides(p: MultiPoly, q: MultiPoly) -> bool:
    """True if p divides q exactly."""
    try:
        exact_div(q, p)
        return True
    except DomainError:
        return False


# -- gcd: primitive subresultant-style PRS, enough for squarefree parts ------


def _int_content(p: MultiPoly) -> int:
    g = 0
    for c in p.terms.values():
        g = math.gcd(g, c)
    return g or 1


def _coeffs_in(p: MultiPoly, name: str) -> list[MultiPoly]:
    """Coefficients of p as a polynomial in `name` (degree ascending)."""
    i = p.ring.index[name]
    d = p.degree_in(name)
    buckets: list[dict] = [{} for _ in range(d + 1)]
    for m, c in p.terms.items():
        e = m[i]
        buckets[e][m[:i] + (0,) + m[i + 1:]] = c
    return [p.ring.poly(b) for b in buckets]


def _from_coeffs(coeffs: list[MultiPoly], name: str, ring_: PolyRing) -> MultiPoly:
    i = ring_.index[name]
    out: dict[tuple[int, ...], int] = {}
    for e, coef in enumerate(coeffs):
        for m, c in coef.terms.items():
            out[m[:i] + (e,) + m[i + 1:]] = c
    return ring_.poly(out)


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """gcd via a primitive pseudo-remainder sequence on the highest-precedence
    variable present.

    Normalization: if both arguments are constants the integer gcd is
    returned; otherwise the result is the primitive part of the gcd (integer
    content dropped).  That is all the squarefree machinery needs; full
    multivariate gcds are out of scope.
    """
    if p.ring is not q.ring:
        raise RingError("mixed rings in gcd")
    ring_ = p.ring
    if p.is_zero():
        return q if q.is_zero() else content_primitive(q)[1]
    if q.is_zero():
        return content_primitive(p)[1]
    if p.is_constant() or q.is_constant():
        if ring_.char:
            return ring_.one()
        return ring_.const(math.gcd(_int_content(p), _int_content(q)))
    used = [v for v in ring_.variables
            if p.degree_in(v) > 0 or q.degree_in(v) > 0]
    name = used[0]
    a, b = (p, q) if p.degree_in(name) >= q.degree_in(name) else (q, p)
    ca, cb = _poly_content(a, name), _poly_content(b, name)
    cont = poly_gcd(ca, cb)
    a, b = exact_div(a, ca), exact_div(b, cb)
    while True:
        r = _pseudo_rem(a, b, name)
        if r.is_zero():
            g = exact_div(b, _poly_content(b, name))
            break
        if r.degree_in(name) == 0:
            g = ring_.one()
            break
        a, b = b, exact_div(r, _poly_content(r, name))
    return content_primitive(cont * g)[1]


def _poly_content(p: MultiPoly, name: str) -> MultiPoly:
    """Content of p viewed as a polynomial in `name`: the gcd of its
    coefficient polynomials (integer content included in char 0)."""
    coeffs = [c for c in _coeffs_in(p, name) if not c.is_zero()]
    g = coeffs[0]
    for c in coeffs[1:]:
        g = poly_gcd(g, c)
        if g.is_constant():
            break
    if p.ring.char:
        return g if not g.is_constant() else p.ring.one()
    ic = _fold(math.gcd, (_int_content(c) for c in coeffs))
    if g.is_constant():
        return p.ring.const(ic)
    return g * ic if ic > 1 else g


def _pseudo_rem(a: MultiPoly, b: MultiPoly, name: str) -> MultiPoly:
    """Pseudo-remainder of a by b in the variable `name` (no coefficient
    division; a is scaled by powers of lc(b))."""
    ring_ = a.ring
    i = ring_.index[name]
    db = b.degree_in(name)
    cb = _coeffs_in(b, name)
    lcb = cb[db]
    r = a
    while not r.is_zero():
        dr = r.degree_in(name)
        if dr < db:
            break
        cr = _coeffs_in(r, name)
        lead = cr[dr]
        shift = [0] * ring_.nvars
        shift[i] = dr - db
        r = r * lcb - b.scale_monomial(1, tuple(shift)) * lead
    return r


def resultant(p: MultiPoly, q: MultiPoly, name: str) -> MultiPoly:
    """Resultant of p and q with respect to `name`, up to sign, via the
    subresultant pseudo-remainder sequence (Collins' exact divisions keep the
    intermediate coefficients small)."""
    if p.ring is not q.ring:
        raise RingError("mixed rings in resultant")
    ring_ = p.ring
    if p.is_zero() or q.is_zero():
        return ring_.zero()
    f, g = p, q
    n, m = f.degree_in(name), g.degree_in(name)
    if n < m:
        f, g, n, m = g, f, m, n
    if m == 0:
        return g**n if n else ring_.one()

    def lead(h):
        return _coeffs_in(h, name)[h.degree_in(name)]

    def prem_std(a, b):
        """Standardized pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b."""
        da, db = a.degree_in(name), b.degree_in(name)
        lcb = lead(b)
        i = ring_.index[name]
        cb = _coeffs_in(b, name)
        r = a
        scaled = 0
        while not r.is_zero():
            dr = r.degree_in(name)
            if dr < db:
                break
            lcr = _coeffs_in(r, name)[dr]
            shift = [0] * ring_.nvars
            shift[i] = dr - db
            r = r * lcb - b.scale_monomial(1, tuple(shift)) * lcr
            scaled += 1
        top_up = da - db + 1 - scaled
        if top_up > 0:
            r = r * lcb**top_up
        return r

    d = n - m
    h = prem_std(f, g)
    if d % 2 == 0:
        h = -h
    lc = lead(g)
    c = lc**d
    s_last = c
    c = -c
    while not h.is_zero():
        k = h.degree_in(name)
        f, g, m, d = g, h, k, m - k
        b = -lc * c**d
        h = prem_std(f, g)
        if not h.is_zero():
            h = exact_div(h, b)
        lc = lead(g)
        if d > 1:
            c = exact_div((-lc) ** d, c ** (d - 1))
        else:
            c = -lc
        s_last = -c
    if g.degree_in(name) > 0:
        return ring_.zero()
    return s_last


def squarefree_part(p: MultiPoly, main_vars=None) -> MultiPoly:
    """Product of the distinct irreducible factors of p, up to unit.

    Iterated gcds with the partial derivatives; in char p, a polynomial all of
    whose exponents are multiples of p is replaced by its p-th root (the
    coefficient-wise identity on F_p) before recursing.
    """
    if p.is_zero():
        raise DomainError("zero polynomial has no squarefree part")
    ring_ = p.ring
    if main_vars is None:
        main_vars = p.support_variables()
    main_vars = [v for v in main_vars if p.degree_in(v) > 0]
    if not main_vars:
        return ring_.one()
    char = ring_.char
    g = p
    for v in main_vars:
        g = poly_gcd(g, partial_derivative(p, v))
        if g.is_constant():
            return content_primitive(p)[1]
    if char and all(partial_derivative(p, v).is_zero() for v in main_vars):
        root: dict[tuple[int, ...], int] = {}
        for m, c in p.terms.items():
            if any(m[ring_.index[v]] % char for v in main_vars):
                raise DomainError("inconsistent p-th power structure")
            exps = list(m)
            for v in main_vars:
                exps[ring_.index[v]] //= char
            root[tuple(exps)] = c
        return squarefree_part(ring_.poly(root), main_vars)
    w = exact_div(p, g)
    # w carries each factor of multiplicity not divisible by char once;
    # the factors with char | multiplicity survive fully inside r below.
    r = g
    gw = poly_gcd(r, w)
    while not gw.is_constant():
        r = exact_div(r, gw)
        gw = poly_gcd(r, w)
    if r.is_constant() or all(r.degree_in(v) == 0 for v in main_vars):
        return content_primitive(w)[1]
    return content_primitive(w * squarefree_part(r, main_vars))[1]
