"""Feasibility spike: m137 character-variety and A-polynomial eliminations."""
import time

from sl2char.ringpoly import ring, reduce_mod_p, content_primitive
from sl2char.groebner import PolyIdeal, buchberger, eliminate, saturate_by_unit
from sl2char.words import parse_presentation, Ansatz, SymMat2, relator_ideal, evaluate_word

M137 = """
gens: m b
rel: b^-1*m^-1*b^-1*m^-1*b^2*m*b^-2*m*b^2*m^-1
cusp: m ; b^2*m^-1*b^-3*m^-1*b^2
"""

pres = parse_presentation(M137)
print("relators:", [r.text(pres.names) for r in pres.relators])

char = 0
R = ring(char, ("u", "bbar", "mbar", "b", "l", "m"), "lex")
m, mbar = R.var("m"), R.var("mbar")
b, bbar, u, l = R.var("b"), R.var("bbar"), R.var("u"), R.var("l")
M = SymMat2(m, R.one(), R.zero(), mbar)
B = SymMat2(b, R.zero(), u, bbar)
ansatz = Ansatz.from_images(R, [M, B], [m * mbar - 1, b * bbar - 1])

t0 = time.time()
I = relator_ideal(pres, ansatz, split_relators=True)
print("relator ideal gens:", len(I.gens), "degrees:", [g.total_degree() for g in I.gens])

# Step 1: eliminate u, bbar, mbar -> f(m, b)?  (keep l out for now)
t0 = time.time()
E = eliminate(I, {"b", "m", "l"}, budget=500_000)
print("f(m,b) elimination took %.1fs" % (time.time() - t0))
for g in E.gens:
    print("  ", g.text()[:200])

# paper's f(m,b)
Rmb = ring(0, ("b", "m"), "lex")
f_paper = Rmb.parse(
    "b^8*m^6-2*b^8*m^3+b^8"
    "+3*b^6*m^6-b^6*m^5+b^6*m^4-6*b^6*m^3+b^6*m^2-b^6*m+3*b^6"
    "+4*b^4*m^6-2*b^4*m^5+2*b^4*m^4-9*b^4*m^3+2*b^4*m^2-2*b^4*m+4*b^4"
    "+3*b^2*m^6-b^2*m^5+b^2*m^4-6*b^2*m^3+b^2*m^2-b^2*m+3*b^2"
    "+m^6-2*m^3+1"
)
print("paper f(m,b):", f_paper.text()[:100])
