"""Group presentations, free-word algebra, and symbolic 2x2 evaluation.

Words are freely reduced sequences of signed generator letters.  A
presentation file is line oriented::

    # comment
    gens: a b
    rel: a^3*b^2*a^-1*b^-3*a^-1*b^2
    cusp: a ; a^-1*b^2*a^4*b^2

Parsing and serialization round-trip bit-exactly on the canonical form.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field

from .groebner import PolyIdeal
from .ringpoly import DomainError, MultiPoly, PolyRing


class ParseError(Exception):
    """Presentation / word syntax error, carrying line and column."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


def _free_reduce(letters):
    out = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; letters are (generator index, sign) pairs with
    0-based indices and signs in {+1, -1}."""

    letters: tuple[tuple[int, int], ...]

    @staticmethod
    def make(letters) -> "Word":
        return Word(_free_reduce(list(letters)))

    @staticmethod
    def identity() -> "Word":
        return Word(())

    @staticmethod
    def generator(i: int, power: int = 1) -> "Word":
        sign = 1 if power > 0 else -1
        return Word(tuple((i, sign) for _ in range(abs(power))))

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def concat(self, other: "Word") -> "Word":
        return Word(_free_reduce(list(self.letters) + list(other.letters)))

    __mul__ = concat

    def cyclic_reduce(self) -> "Word":
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0][0] == ls[-1][0] and ls[0][1] == -ls[-1][1]:
            ls = ls[1:-1]
        return Word(tuple(ls))

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    def text(self, names) -> str:
        if not self.letters:
            return ""
        parts = []
        i = 0
        while i < len(self.letters):
            g, s = self.letters[i]
            j = i
            while j + 1 < len(self.letters) and self.letters[j + 1] == (g, s):
                j += 1
            power = (j - i + 1) * s
            parts.append(names[g] if power == 1 else f"{names[g]}^{power}")
            i = j + 1
        return "*".join(parts)


def word_ops(w: Word, op: str, other: Word | None = None) -> Word:
    """Dispatch helper: op in {inverse, cyclic_reduce, concat}."""
    if op == "inverse":
        return w.inverse()
    if op == "cyclic_reduce":
        return w.cyclic_reduce()
    if op == "concat":
        if other is None:
            raise DomainError("concat needs a second word")
        return w.concat(other)
    raise DomainError(f"unknown word op {op!r}")


_ID_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def parse_word(text: str, names, line=None) -> Word:
    """Parse `id(^int)?(*id(^int)?)*`; the empty string is the identity."""
    text = text.strip()
    if not text:
        return Word.identity()
    index = {n: i for i, n in enumerate(names)}
    letters = []
    for col, term in _enumerate_terms(text, line):
        m = _ID_RE.match(term)
        if not m:
            raise ParseError(f"bad word term {term!r}", line, col)
        name = m.group(0)
        rest = term[m.end():]
        if name not in index:
            raise ParseError(f"undeclared generator {name!r}", line, col)
        power = 1
        if rest:
            if not rest.startswith("^"):
                raise ParseError(f"bad word term {term!r}", line, col)
            try:
                power = int(rest[1:])
            except ValueError:
                raise ParseError(f"bad exponent in {term!r}", line, col) from None
        if power:
            sign = 1 if power > 0 else -1
            letters.extend((index[name], sign) for _ in range(abs(power)))
    return Word(_free_reduce(letters))


def _enumerate_terms(text, line):
    col = 1
    for chunk in text.split("*"):
        yield col, chunk.strip()
        col += len(chunk) + 1


@dataclass(frozen=True)
class Presentation:
    """A finite presentation with an optional peripheral system."""

    names: tuple[str, ...]
    relators: tuple[Word, ...]
    peripherals: tuple[tuple[Word, Word], ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.names)

    def serialize(self) -> str:
        lines = ["gens: " + " ".join(self.names)]
        lines.extend("rel: " + r.text(self.names) for r in self.relators)
        lines.extend(f"cusp: {m.text(self.names)} ; {l.text(self.names)}"
                     for m, l in self.peripherals)
        return "\n".join(lines) + "\n"


def parse_presentation(text) -> Presentation:
    """Parse the presentation grammar; relators that reduce to the empty word
    are dropped with a warning."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    names: tuple[str, ...] | None = None
    relators: list[Word] = []
    peripherals: list[tuple[Word, Word]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, body = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno, 1)
        key = key.strip()
        body = body.strip()
        if key == "gens":
            if names is not None:
                raise ParseError("duplicate gens line", lineno, 1)
            names = tuple(body.split())
            if len(set(names)) != len(names):
                raise ParseError("duplicate generator names", lineno, 1)
            for n in names:
                if not _ID_RE.fullmatch(n):
                    raise ParseError(f"bad generator name {n!r}", lineno, 1)
        elif key == "rel":
            if names is None:
                raise ParseError("rel before gens", lineno, 1)
            w = parse_word(body, names, lineno).cyclic_reduce()
            if not w.letters:
                if body:
                    warnings.warn(f"relator {body!r} reduces to the empty word; dropped")
                continue
            relators.append(w)
        elif key == "cusp":
            if names is None:
                raise ParseError("cusp before gens", lineno, 1)
            mer, sep2, lon = body.partition(";")
            if not sep2:
                raise ParseError("cusp needs 'meridian ; longitude'", lineno, 1)
            peripherals.append((parse_word(mer, names, lineno),
                                parse_word(lon, names, lineno)))
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
    if names is None:
        raise ParseError("missing gens line")
    return Presentation(names, tuple(relators), tuple(peripherals))


# ---------------------------------------------------------------------------
# symbolic 2x2 matrices


@dataclass(frozen=True)
class SymMat2:
    """2x2 matrix of polynomials; the det = 1 constraint is a side relation
    supplied by the ansatz, never enforced entry-wise."""

    a: MultiPoly
    b: MultiPoly
    c: MultiPoly
    d: MultiPoly

    @staticmethod
    def identity(ring_: PolyRing) -> "SymMat2":
        one, zero = ring_.one(), ring_.zero()
        return SymMat2(one, zero, zero, one)

    def __mul__(self, o: "SymMat2") -> "SymMat2":
        return SymMat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def adjugate(self) -> "SymMat2":
        return SymMat2(self.d, -self.b, -self.c, self.a)

    def trace(self) -> MultiPoly:
        return self.a + self.d

    def det(self) -> MultiPoly:
        return self.a * self.d - self.b * self.c

    def entries(self):
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class Ansatz:
    """Generator images plus their inverses and the side relations (unit
    relations x*xbar - 1 and determinant relations) the images assume."""

    ring: PolyRing
    images: tuple[SymMat2, ...]
    inverse_images: tuple[SymMat2, ...]
    side_relations: tuple[MultiPoly, ...]

    @staticmethod
    def from_images(ring_, images, side_relations=()) -> "Ansatz":
        images = tuple(images)
        return Ansatz(ring_, images,
                      tuple(m.adjugate() for m in images),
                      tuple(side_relations))


def generic_ansatz(pres: Presentation, char: int, kind: str = "lex",
                   extra_vars: tuple[str, ...] = (),
                   extra_last: tuple[str, ...] = ()) -> Ansatz:
    """Fully generic images ((a_i, b_i), (c_i, d_i)) with determinant side
    relations; entry variables are ordered by generator declaration."""
    from .ringpoly import ring as mk_ring

    entry_names = []
    for i in range(1, pres.n + 1):
        entry_names.extend((f"a{i}", f"b{i}", f"c{i}", f"d{i}"))
    r = mk_ring(char, tuple(extra_vars) + tuple(entry_names) + tuple(extra_last), kind)
    images = []
    rels = []
    for i in range(1, pres.n + 1):
        a, b = r.var(f"a{i}"), r.var(f"b{i}")
        c, d = r.var(f"c{i}"), r.var(f"d{i}")
        images.append(SymMat2(a, b, c, d))
        rels.append(a * d - b * c - 1)
    return Ansatz.from_images(r, images, rels)


def evaluate_word(w: Word, images, inverse_images=None) -> SymMat2:
    """Exact product of generator images over the polynomial ring; the empty
    word maps to the identity."""
    if not images:
        raise DomainError("no generator images")
    if inverse_images is None:
        inverse_images = [m.adjugate() for m in images]
    ring_ = images[0].a.ring
    acc = SymMat2.identity(ring_)
    for g, s in w.letters:
        if g >= len(images):
            raise DomainError(f"generator index {g} out of range")
        acc = acc * (images[g] if s > 0 else inverse_images[g])
    return acc


def balanced_split(w: Word) -> tuple[Word, Word]:
    """Split the relator w into (u, v) with w = u * v^-1 and |u| ~ |v|;
    evaluating u - v instead of w - identity halves entry degrees."""
    k = (len(w.letters) + 1) // 2
    u = Word(w.letters[:k])
    v = Word(w.letters[k:]).inverse()
    return u, v


def relator_ideal(pres: Presentation, ansatz: Ansatz,
                  split_relators: bool = False) -> PolyIdeal:
    """The representation-variety ideal for the given ansatz: the four entry
    differences of every evaluated relator against the identity, plus the
    ansatz side relations (unit and determinant constraints).

    With ``split_relators`` each relator w is evaluated as u = v for a
    balanced split w = u*v^-1; modulo the determinant relations this
    generates the same ideal with half the degree.
    """
    gens: list[MultiPoly] = list(ansatz.side_relations)
    id_mat = SymMat2.identity(ansatz.ring)
    for rel in pres.relators:
        if split_relators:
            u, v = balanced_split(rel)
            left = evaluate_word(u, ansatz.images, ansatz.inverse_images)
            right = evaluate_word(v, ansatz.images, ansatz.inverse_images)
        else:
            left = evaluate_word(rel, ansatz.images, ansatz.inverse_images)
            right = id_mat
        for x, y in zip(left.entries(), right.entries()):
            diff = x - y
            if not diff.is_zero():
                gens.append(diff)
    return PolyIdeal.from_gens(gens, ansatz.ring)
