import sys, time
import spike_subst as SS
from sl2char.groebner import PolyIdeal, buchberger, eliminate
from sl2char.ringpoly import (ring, content_primitive, _pseudo_rem, poly_gcd,
                              _poly_content, exact_div, divides)

char = int(sys.argv[1]) if len(sys.argv) > 1 else 0
I4 = SS.S.build(char, ("u","b","l","m"), "lex")
R = I4.ring
_Re = ring(char, ("u","b","l","m"), "elim1")
rel_pre = PolyIdeal.from_gens([g.map_ring(_Re) for g in I4.gens if g.degree_in("l") == 0], _Re)
gb_rel = buchberger(rel_pre, budget=300000)
cands = [g for g in gb_rel.basis if g.degree_in("u") == 1]
lin = min(cands, key=lambda g: len(g.terms)).map_ring(R)
cN, cD = SS.coeffs_in_u(lin, R)
D, N = cD, -cN
subbed = []
for g in I4.gens:
    cs = SS.coeffs_in_u(g, R)
    d = len(cs) - 1
    acc = R.zero()
    for k, gk in enumerate(cs):
        acc = acc + gk * N**k * D**(d-k)
    if not acc.is_zero():
        subbed.append(content_primitive(acc)[1])
curve = [g for g in gb_rel.basis if g.degree_in("u") == 0]
print("curve gens:", [(len(g.terms), g.degree_in("b")) for g in curve])
lon = [g for g in subbed if g.degree_in("l") == 1]
print("lon gens:", [(len(g.terms), g.degree_in("b")) for g in lon])

def resultant_b(f, g):
    a, b_ = (f, g) if f.degree_in("b") >= g.degree_in("b") else (g, f)
    while True:
        r = _pseudo_rem(a, b_, "b")
        if r.is_zero():
            return a.ring.zero()
        if r.degree_in("b") == 0:
            return r
        r = content_primitive(r)[1]
        pc = _poly_content(r, "b")
        if not pc.is_constant():
            r = exact_div(r, pc)
        a, b_ = b_, r

t0 = time.time()
c1 = min(curve, key=lambda g: (g.degree_in("b"), len(g.terms))).map_ring(R)
c2 = max(curve, key=lambda g: (g.degree_in("b"), len(g.terms))).map_ring(R)
R1 = content_primitive(resultant_b(c1, lon[0].map_ring(R)))[1]
print("R1: %.1fs deg_m=%d deg_l=%d terms=%d" % (time.time()-t0, R1.degree_in("m"), R1.degree_in("l"), len(R1.terms)))
t0 = time.time()
R2 = content_primitive(resultant_b(c2, lon[0].map_ring(R)))[1]
print("R2: %.1fs deg_m=%d deg_l=%d" % (time.time()-t0, R2.degree_in("m"), R2.degree_in("l")))
t0 = time.time()
Gd = poly_gcd(R1, R2)
print("gcd: %.1fs deg_m=%d deg_l=%d terms=%d" % (time.time()-t0, Gd.degree_in("m"), Gd.degree_in("l"), len(Gd.terms)))
Rml = ring(char, ("m","l"), "lex")
print(Gd.map_ring(Rml).text()[:500])
