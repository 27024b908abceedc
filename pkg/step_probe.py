import time
import sl2char.groebner as G
import spike_battery as S
from sl2char.groebner import BudgetError

I = S.cleared_gens(2, ("u","b","l","m"), "elim1")
print("gens:", [(len(g.terms), g.total_degree(), g.degree_in("u")) for g in I.gens])

# patch reduction with step counting
import heapq
from sl2char.groebner import _divides, _sub, _mul, _neg_key
def probe_reduce(f, divisors, pivot_log=None, head_only=False):
    ring_ = f.ring; char = ring_.char; key = ring_.key
    prepared = []
    for g in divisors:
        if g.is_zero(): continue
        lm = g.leading_monomial()
        prepared.append((lm, g.terms[lm], g.terms))
    work = dict(f.terms)
    heap = [(_neg_key(key(m)), m) for m in work]
    heapq.heapify(heap)
    done = {}
    steps = 0
    t0 = time.time()
    while heap:
        lm = heapq.heappop(heap)[1]
        lc = work.get(lm)
        if not lc: continue
        best = None; best_len = 0
        for glm, glc, gterms in prepared:
            if _divides(glm, lm) and (best is None or len(gterms) < best_len):
                best = (glm, glc, gterms); best_len = len(gterms)
        if best is None:
            if head_only:
                done.update(work); break
            done[lm] = lc; del work[lm]; continue
        steps += 1
        if steps % 20000 == 0:
            print(f"    ...steps={steps} |work|={len(work)} heap={len(heap)} t={time.time()-t0:.1f}")
        glm, glc, gterms = best
        shift = _sub(lm, glm)
        factor = lc * pow(glc, char - 2, char) % char
        for m2, c2 in gterms.items():
            m = _mul(shift, m2)
            old = work.get(m, 0)
            v = (old - factor * c2) % char
            if v:
                if not old: heapq.heappush(heap, (_neg_key(key(m)), m))
                work[m] = v
            elif old:
                del work[m]
    from sl2char.ringpoly import MultiPoly
    return MultiPoly(ring_, done), {"scale": 1, "content_removed": 1}

G.divfree_reduce = probe_reduce
t0 = time.time()
stat = [0]
orig = probe_reduce
def counting(f, div, log=None, head_only=False):
    stat[0] += 1
    r, rec = orig(f, div, log, head_only)
    print(f"  pair {stat[0]}: fterms={len(f.terms)} -> rterms={len(r.terms)}  t={time.time()-t0:.1f}")
    return r, rec
G.divfree_reduce = counting
try:
    gb = G.buchberger(I, budget=40)
    print("done basis=%d" % len(gb.basis))
except BudgetError:
    print("budget 40 hit %.1fs" % (time.time()-t0))
