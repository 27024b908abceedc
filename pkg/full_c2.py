import time
import sl2char.groebner as G
import spike_battery as S
from sl2char.groebner import BudgetError

orig_reduce = G.divfree_reduce
t0 = time.time()
stat = [0]
def counting(f, div, log=None, head_only=False):
    stat[0] += 1
    if stat[0] % 100 == 0:
        print(f"  pairs={stat[0]} t={time.time()-t0:.0f}s")
    return orig_reduce(f, div, log, False)
G.divfree_reduce = counting
I = S.cleared_gens(2, ("u","b","l","m"), "elim1")
try:
    gb = G.buchberger(I, budget=4000)
    print("char2 FULL-reduction: done %.1fs basis=%d" % (time.time()-t0, len(gb.basis)))
    ufree = [g for g in gb.basis if g.degree_in("u") == 0]
    print("  u-free:", len(ufree))
except BudgetError:
    print("char2 FULL: budget hit %.1fs" % (time.time()-t0))
