import sys, time
import sl2char.groebner as G
import spike_subst as SS
from sl2char.groebner import BudgetError, PolyIdeal, buchberger, eliminate
from sl2char.ringpoly import ring, content_primitive

char = int(sys.argv[1])
I4 = SS.S.build(char, ("u","b","l","m"), "lex")
R = I4.ring
lin = next(g for g in I4.gens if g.degree_in("u") == 1)
cN, cD = SS.coeffs_in_u(lin, R)
D, N = cD, -cN
subbed = []
for g in I4.gens:
    if g is lin: continue
    cs = SS.coeffs_in_u(g, R)
    d = len(cs) - 1
    acc = R.zero()
    for k, gk in enumerate(cs):
        acc = acc + gk * N**k * D**(d-k)
    if not acc.is_zero():
        subbed.append(content_primitive(acc)[1])
rel_only = PolyIdeal.from_gens([g for g in I4.gens if g.degree_in("l") == 0], R)
curve = eliminate(rel_only, {"b","l","m"}, budget=300000)
R3 = ring(char, ("b","l","m"), "elim1")
gens3 = [g.map_ring(R3) for g in subbed] + [g.map_ring(R3) for g in curve.gens]
J = PolyIdeal.from_gens(gens3, R3)

orig = G.divfree_reduce
t0=time.time(); stat=[0]
def counting(f, div, log=None, head_only=False):
    stat[0]+=1
    r, rec = orig(f, div, log, head_only)
    if stat[0] % 20 == 0:
        d2=list(div)
        if char == 0:
            dig = max((max(len(str(abs(c))) for c in g.terms.values()) for g in d2 if g.terms), default=0)
        else: dig=0
        print(f"  pairs={stat[0]} t={time.time()-t0:.0f}s basis={len(d2)} maxterms={max(len(g.terms) for g in d2)} dig={dig}", flush=True)
    return r, rec
G.divfree_reduce = counting
try:
    gb = buchberger(J, budget=60000)
    print("DONE %.1fs basis=%d bfree=%d" % (time.time()-t0, len(gb.basis), sum(1 for g in gb.basis if g.degree_in("b")==0)))
    for g in gb.basis:
        if g.degree_in("b") == 0:
            print("   ", len(g.terms), g.degree_in("m"), g.degree_in("l"))
except BudgetError as e:
    print("BUDGET hit")
