import sys, time
import sl2char.groebner as G
import spike_battery as S
from sl2char.groebner import BudgetError, buchberger

char = int(sys.argv[1]); kind = sys.argv[2]; budget = int(sys.argv[3])
I = S.cleared_gens(char, ("u","b","l","m"), kind)
orig = G.divfree_reduce
t0 = time.time(); stat=[0]
def counting(f, div, log=None, head_only=False):
    stat[0] += 1
    r, rec = orig(f, div, log, head_only)
    if stat[0] % 1 == 0:
        div2 = list(div)
        mx = max((len(g.terms) for g in div2), default=0)
        if char == 0:
            dig = max((max(len(str(abs(c))) for c in g.terms.values()) for g in div2 if g.terms), default=0)
        else:
            dig = 0
        print(f"  pairs={stat[0]} t={time.time()-t0:.0f}s basis={len(div2)} maxterms={mx} maxdigits={dig}", flush=True)
    return r, rec
G.divfree_reduce = counting
try:
    gb = buchberger(I, budget=budget)
    print(f"DONE {time.time()-t0:.1f}s basis={len(gb.basis)} pairs={stat[0]}")
    free = [g for g in gb.basis if g.degree_in("u")==0]
    print("u-free:", len(free))
except BudgetError:
    print(f"BUDGET {budget} hit, {time.time()-t0:.1f}s")
