"""Division-free Buchberger over Z and F_p, with elimination and saturation.

Reduction never divides by a coefficient: to cancel the leading term of f
against g, f is scaled by lc(g) first.  Over Z every intermediate polynomial
therefore stays integral, and the leading coefficients met along the way (the
pivot log) control how the computation transfers to characteristic p: primes
dividing no pivot reproduce the characteristic-0 basis verbatim modulo p.

All choices (pair selection, reducer selection, inter-reduction order) are
fixed, so a second run on the same ideal is byte-identical to the first.
"""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass, field

from .ringpoly import (
    ELIM1,
    GREVLEX,
    DomainError,
    LEX,
    MultiPoly,
    PolyRing,
    RingError,
    content_primitive,
    ring,
)

DEFAULT_BUDGET = 200_000


class BudgetError(Exception):
    """Raised when the pair-reduction budget is exhausted; carries the
    partial basis so a caller can resume or report."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class PolyIdeal:
    """A finite generating set; generators are content-normalized."""

    char: int
    gens: tuple[MultiPoly, ...]
    ring: PolyRing

    @staticmethod
    def from_gens(gens, ring_: PolyRing) -> "PolyIdeal":
        normalized = []
        for g in gens:
            if g.ring is not ring_:
                raise RingError("generator in wrong ring")
            if not g.is_zero():
                normalized.append(content_primitive(g)[1])
        normalized.sort(key=lambda g: (g.ring.key(g.leading_monomial()), g.text()))
        return PolyIdeal(ring_.char, tuple(normalized), ring_)

    def to_json(self) -> str:
        return json.dumps(
            {
                "char": self.char,
                "order": {"kind": self.ring.order.kind,
                          "variables": list(self.ring.variables)},
                "generators": [g.text() for g in self.gens],
            },
            sort_keys=True,
        )

    @staticmethod
    def from_json(text: str) -> "PolyIdeal":
        data = json.loads(text)
        r = ring(data["char"], tuple(data["order"]["variables"]),
                 data["order"]["kind"])
        return PolyIdeal.from_gens([r.parse(g) for g in data["generators"]], r)


@dataclass
class GroebnerBasis:
    ideal: PolyIdeal
    basis: tuple[MultiPoly, ...]
    reduced: bool
    pivot_log: tuple[int, ...] = field(default=())

    def pivot_primes_dividing(self, p: int) -> bool:
        """True if the prime p divides some pivot entry."""
        return any(entry % p == 0 for entry in self.pivot_log)

    def text_lines(self) -> list[str]:
        return [g.text() for g in self.basis]


# ---------------------------------------------------------------------------
# monomial helpers on dense exponent tuples


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _neg_key(k):
    """Negate an order key (possibly nested int tuples) for max-heap use."""
    return tuple(-x if isinstance(x, int) else _neg_key(x) for x in k)


# ---------------------------------------------------------------------------
# division-free reduction


def divfree_reduce(f: MultiPoly, divisors, pivot_log: list | None = None,
                   head_only: bool = False):
    """Reduce f by the divisor sequence without coefficient division.

    Whenever some lm(g) divides the leading monomial under attack, the
    working polynomial is replaced by ``lc(g)*work - lt/lm(g)*g`` and the
    content is divided out again.  By default every monomial is reduced
    (the remainder has no monomial divisible by any lm(g)); with
    ``head_only`` reduction stops once the leading monomial is irreducible,
    which is what the Buchberger loop uses to keep integer growth down.

    Returns ``(remainder, record)`` where the record holds the accumulated
    integer scale: ``scale * f = combination + content_removed * remainder``.
    """
    ring_ = f.ring
    char = ring_.char
    key = ring_.key
    prepared = []
    for g in divisors:
        if g.ring is not ring_:
            raise RingError("divisor in wrong ring")
        if g.is_zero():
            continue
        lm = g.leading_monomial()
        prepared.append((lm, g.terms[lm], g.terms))
    # preferred reducers first: unit leading coefficient, then small leading
    # coefficient, then few terms; the scan below takes the first divisor hit
    prepared.sort(key=lambda t: (abs(t[1]) != 1, abs(t[1]), len(t[2])))
    work = dict(f.terms)
    # lazy max-heap of candidate leading monomials (keys negated for heapq);
    # every monomial present in `work` always has at least one heap entry
    heap = [(_neg_key(key(m)), m) for m in work]
    heapq.heapify(heap)
    done: dict[tuple[int, ...], int] = {}
    scale = 1
    removed = 1
    while heap:
        lm = heapq.heappop(heap)[1]
        lc = work.get(lm)
        if not lc:
            continue
        best = None
        for cand in prepared:
            if _divides(cand[0], lm):
                best = cand
                break
        if best is None:
            if head_only:
                done.update(work)
                break
            done[lm] = lc
            del work[lm]
            continue
        glm, glc, gterms = best
        shift = _sub(lm, glm)
        if char:
            factor = lc * pow(glc, char - 2, char) % char
            for m2, c2 in gterms.items():
                m = _mul(shift, m2)
                old = work.get(m, 0)
                v = (old - factor * c2) % char
                if v:
                    if not old:
                        heapq.heappush(heap, (_neg_key(key(m)), m))
                    work[m] = v
                elif old:
                    del work[m]
        else:
            # the paper's step is work <- glc*work - lc*shift*g followed by
            # content normalization; dividing both multipliers by their gcd
            # up front is the same composite and keeps integers small
            d = math.gcd(lc, glc)
            wmul = glc // d
            gmul = lc // d
            if pivot_log is not None and wmul not in (1, -1):
                pivot_log.append(abs(wmul))
            if wmul != 1:
                scale *= wmul
                for m in work:
                    work[m] *= wmul
                for m in done:
                    done[m] *= wmul
            for m2, c2 in gterms.items():
                m = _mul(shift, m2)
                old = work.get(m, 0)
                v = old - gmul * c2
                if v:
                    if not old:
                        heapq.heappush(heap, (_neg_key(key(m)), m))
                    work[m] = v
                elif old:
                    del work[m]
            g0 = 0
            for c in work.values():
                g0 = math.gcd(g0, c)
                if g0 == 1:
                    break
            if g0 != 1 and (work or done):
                for c in done.values():
                    g0 = math.gcd(g0, c)
                    if g0 == 1:
                        break
                if g0 > 1:
                    removed *= g0
                    if pivot_log is not None:
                        pivot_log.append(g0)
                    for m in work:
                        work[m] //= g0
                    for m in done:
                        done[m] //= g0
    remainder = MultiPoly(ring_, done)
    return remainder, {"scale": scale, "content_removed": removed}


def s_polynomial(f: MultiPoly, g: MultiPoly, pivot_log: list | None = None) -> MultiPoly:
    """S(f,g) = (lc(g) x^y / lm(f)) f - (lc(f) x^y / lm(g)) g, y = lcm."""
    if f.is_zero() or g.is_zero():
        raise DomainError("S-polynomial of a zero polynomial")
    if f.ring is not g.ring:
        raise RingError("mixed rings")
    char = f.ring.char
    flm, glm = f.leading_monomial(), g.leading_monomial()
    flc, glc = f.terms[flm], g.terms[glm]
    y = _lcm(flm, glm)
    if pivot_log is not None and char == 0:
        for c in (flc, glc):
            if c not in (1, -1):
                pivot_log.append(abs(c))
    left = f.scale_monomial(glc, _sub(y, flm))
    right = g.scale_monomial(flc, _sub(y, glm))
    return left - right


# ---------------------------------------------------------------------------
# Buchberger


def _prepare(g: MultiPoly, char: int) -> MultiPoly:
    return content_primitive(g)[1]


def buchberger(ideal: PolyIdeal, budget: int = DEFAULT_BUDGET,
               reduced: bool = True) -> GroebnerBasis:
    """Division-free Buchberger with normal pair selection (minimal lcm in
    the attached order, ties by insertion index) and the coprime/chain
    criteria applied at pair-update time."""
    ring_ = ideal.ring
    char = ring_.char
    key = ring_.key
    pivots: list[int] = []

    G: list[MultiPoly] = []
    lmG: list[tuple[int, ...]] = []
    sugar: list[int] = []
    pairs: set[tuple[int, int]] = set()
    heap: list = []

    def log_lc(g: MultiPoly):
        if char == 0:
            lc = g.leading_coefficient()
            if lc not in (1, -1):
                pivots.append(abs(lc))

    def push_pairs(new_pairs):
        # sugar-first selection: phantom homogenized degree, then the normal
        # strategy (lcm in the attached order), ties by insertion index
        for i, j in new_pairs:
            lcm = _lcm(lmG[i], lmG[j])
            deg = sum(lcm)
            sug = max(sugar[i] + deg - sum(lmG[i]), sugar[j] + deg - sum(lmG[j]))
            heapq.heappush(heap, (sug, key(lcm), j, i))

    def update(f: MultiPoly, sug=None):
        """Gebauer-Moller pair update: applies the coprime criterion and the
        chain criterion, both of which only drop pairs whose S-polynomials
        provably reduce to zero."""
        nonlocal pairs
        t = len(G)
        lmf = f.leading_monomial()
        kept = set()
        for (i, j) in pairs:
            lij = _lcm(lmG[i], lmG[j])
            if (not _divides(lmf, lij)
                    or lij == _lcm(lmG[i], lmf)
                    or lij == _lcm(lmG[j], lmf)):
                kept.add((i, j))
        pairs = kept
        lcm_groups: dict[tuple[int, ...], list[int]] = {}
        for i in range(t):
            lcm_groups.setdefault(_lcm(lmG[i], lmf), []).append(i)
        minimal: list[tuple[int, ...]] = []
        for L in sorted(lcm_groups, key=key):
            if not any(_divides(M, L) for M in minimal):
                minimal.append(L)
        fresh = []
        for L in minimal:
            if not any(_coprime(lmG[i], lmf) for i in lcm_groups[L]):
                fresh.append((min(lcm_groups[L]), t))
        G.append(f)
        lmG.append(lmf)
        sugar.append(sug if sug is not None else f.total_degree())
        pairs |= set(fresh)
        push_pairs(fresh)
        log_lc(f)

    for g in ideal.gens:
        if g.is_constant():
            one = ring_.one()
            return GroebnerBasis(ideal, (one,), True, tuple(pivots))
        update(_prepare(g, char))

    steps = 0
    while pairs:
        while heap:
            entry = heap[0]
            j, i = entry[2], entry[3]
            if (i, j) in pairs:
                break
            heapq.heappop(heap)
        if not heap:
            break
        entry = heapq.heappop(heap)
        pair_sugar, j, i = entry[0], entry[2], entry[3]
        pairs.discard((i, j))
        steps += 1
        if steps > budget:
            raise BudgetError(
                f"pair-reduction budget {budget} exhausted",
                partial=GroebnerBasis(ideal, tuple(G), False, tuple(pivots)),
            )
        s = s_polynomial(G[i], G[j], pivots)
        if s.is_zero():
            continue
        r, _ = divfree_reduce(s, G, pivots)
        if r.is_zero():
            continue
        r = content_primitive(r)[1]
        if r.is_constant():
            return GroebnerBasis(ideal, (ring_.one(),), True, tuple(pivots))
        update(r, max(pair_sugar, r.total_degree()))

    basis = _minimalize(G)
    if reduced:
        basis = _interreduce(basis, pivots)
    basis.sort(key=lambda g: key(g.leading_monomial()))
    return GroebnerBasis(ideal, tuple(basis), reduced, tuple(pivots))


def _minimalize(G: list[MultiPoly]) -> list[MultiPoly]:
    key = G[0].ring.key if G else None
    out: list[MultiPoly] = []
    for g in sorted(G, key=lambda g: key(g.leading_monomial())):
        lm = g.leading_monomial()
        if not any(_divides(h.leading_monomial(), lm) for h in out):
            out.append(g)
    return out


def _interreduce(G: list[MultiPoly], pivots: list | None) -> list[MultiPoly]:
    """Tail-reduce every element by the others, in ascending leading-monomial
    order, until stable.  The paper's reduced-basis convention waives leading
    coefficient 1, so elements are only unique up to scalar."""
    G = list(G)
    changed = True
    while changed:
        changed = False
        for idx in range(len(G)):
            others = G[:idx] + G[idx + 1:]
            r, _ = divfree_reduce(G[idx], others, pivots)
            if r.is_zero():
                del G[idx]
                changed = True
                break
            r = content_primitive(r)[1]
            if r != G[idx]:
                G[idx] = r
                changed = True
    return G


# ---------------------------------------------------------------------------
# elimination and saturation


def eliminate(ideal: PolyIdeal, keep, budget: int = DEFAULT_BUDGET,
              stage: bool = True, pivot_log: list | None = None) -> PolyIdeal:
    """Elimination ideal: the basis elements supported only on `keep`,
    re-expressed as a reduced lex basis over the kept variables.

    The ideal's order must be lex with every eliminated variable preceding
    every kept one.  With ``stage=True`` (default) the variables are dropped
    one at a time, each stage running the division-free Buchberger under the
    internal product order `elim1` (degree in the dropped variable first,
    grevlex on the rest); the composite is the same elimination ideal as a
    single lex run, at a fraction of the cost.  Pivot entries from every
    stage are appended to `pivot_log`.
    """
    ring_ = ideal.ring
    keep = set(keep)
    if ring_.order.kind != LEX:
        raise DomainError("elimination requires a lex order")
    drop = [v for v in ring_.variables if v not in keep]
    split = len(drop)
    if list(ring_.variables[:split]) != drop:
        raise DomainError("eliminated variables must precede kept variables")

    gens = list(ideal.gens)
    remaining = list(ring_.variables)
    if stage:
        for v in drop:
            sub = ring(ring_.char, tuple(remaining), ELIM1)
            sub_ideal = PolyIdeal.from_gens([g.map_ring(sub) for g in gens], sub)
            gb = buchberger(sub_ideal, budget=budget)
            if pivot_log is not None:
                pivot_log.extend(gb.pivot_log)
            remaining = remaining[1:]
            gens = [g for g in gb.basis if g.degree_in(v) == 0]
            if not gens:
                break
    else:
        gb = buchberger(ideal, budget=budget)
        if pivot_log is not None:
            pivot_log.extend(gb.pivot_log)
        gens = [g for g in gb.basis
                if all(v in keep for v in g.support_variables())]
    target = ring(ring_.char, tuple(v for v in ring_.variables if v in keep), LEX)
    gens = [g.map_ring(target) for g in gens]
    if not gens:
        return PolyIdeal.from_gens([], target)
    gb = buchberger(PolyIdeal.from_gens(gens, target), budget=budget)
    if pivot_log is not None:
        pivot_log.extend(gb.pivot_log)
    return PolyIdeal.from_gens(gb.basis, target)


def is_unit_ideal(ideal: PolyIdeal, budget: int = DEFAULT_BUDGET) -> bool:
    """True if the ideal is the whole ring (empty variety), checked by a
    grevlex basis (order is irrelevant for this question)."""
    grev = ring(ideal.char, ideal.ring.variables, GREVLEX)
    regraded = PolyIdeal.from_gens([g.map_ring(grev) for g in ideal.gens], grev)
    gb = buchberger(regraded, budget=budget, reduced=False)
    return len(gb.basis) == 1 and gb.basis[0].is_constant()


def saturate_by_unit(ideal: PolyIdeal, f: MultiPoly,
                     budget: int = DEFAULT_BUDGET) -> PolyIdeal:
    """Saturation I : f^inf via a fresh inverse variable y with y*f - 1
    adjoined and eliminated; the result cuts out the closure of V(I) - V(f).
    """
    if f.is_zero():
        raise DomainError("cannot saturate by zero")
    ring_ = ideal.ring
    base = "y_sat"
    name = base
    k = 0
    while name in ring_.index:
        k += 1
        name = f"{base}{k}"
    ext = ring(ring_.char, (name,) + ring_.variables, LEX)
    gens = [g.map_ring(ext) for g in ideal.gens]
    gens.append(ext.var(name) * f.map_ring(ext) - 1)
    extended = PolyIdeal.from_gens(gens, ext)
    eliminated = eliminate(extended, set(ring_.variables), budget=budget)
    back = [g.map_ring(ring_) for g in eliminated.gens]
    return PolyIdeal.from_gens(back, ring_)


# ---------------------------------------------------------------------------
# cofactor-tracking variant (membership certification; test scale only)


def buchberger_with_trace(ideal: PolyIdeal, budget: int = DEFAULT_BUDGET):
    """Buchberger keeping, for every basis element, the explicit combination
    of input generators that reproduces it: ``g == sum(cof[i] * gens[i])``.

    Content normalization is skipped so the combinations stay exact integer
    identities; only meant for certifying membership on small ideals.
    Returns a list of (poly, cofactor tuple) pairs.
    """
    ring_ = ideal.ring
    key = ring_.key
    gens = list(ideal.gens)
    n = len(gens)
    zero_shift = (0,) * ring_.nvars

    G: list[tuple[MultiPoly, list[MultiPoly]]] = []
    for i, g in enumerate(gens):
        G.append((g, [ring_.one() if j == i else ring_.zero() for j in range(n)]))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    steps = 0
    while pairs:
        pairs.sort(key=lambda p: (key(_lcm(G[p[0]][0].leading_monomial(),
                                           G[p[1]][0].leading_monomial())), p[1], p[0]))
        i, j = pairs.pop(0)
        steps += 1
        if steps > budget:
            raise BudgetError("trace-mode budget exhausted")
        f, cf = G[i]
        g, cg = G[j]
        flm, glm = f.leading_monomial(), g.leading_monomial()
        if _coprime(flm, glm):
            continue
        y = _lcm(flm, glm)
        mf, mg = _sub(y, flm), _sub(y, glm)
        flc, glc = f.terms[flm], g.terms[glm]
        work = f.scale_monomial(glc, mf) - g.scale_monomial(flc, mg)
        wcof = [cf[k].scale_monomial(glc, mf) - cg[k].scale_monomial(flc, mg)
                for k in range(n)]
        while not work.is_zero():
            lm = work.leading_monomial()
            for h, ch in G:
                hlm = h.leading_monomial()
                if _divides(hlm, lm):
                    shift = _sub(lm, hlm)
                    hlc = h.terms[hlm]
                    lc = work.terms[lm]
                    work = work.scale_monomial(hlc, zero_shift) - \
                        h.scale_monomial(lc, shift)
                    wcof = [wcof[k].scale_monomial(hlc, zero_shift)
                            - ch[k].scale_monomial(lc, shift)
                            for k in range(n)]
                    break
            else:
                break
        if work.is_zero():
            continue
        newidx = len(G)
        G.append((work, wcof))
        pairs.extend((i2, newidx) for i2 in range(newidx))
    return G
