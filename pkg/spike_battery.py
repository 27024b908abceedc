"""Compare strategies for the m137 elimination."""
import sys
import time

from sl2char.ringpoly import ring, content_primitive
from sl2char.groebner import PolyIdeal, buchberger, BudgetError
from sl2char.words import parse_presentation, Ansatz, SymMat2, relator_ideal, evaluate_word, Word

M137 = """
gens: m b
rel: b^-1*m^-1*b^-1*m^-1*b^2*m*b^-2*m*b^2*m^-1
cusp: m ; b^2*m^-1*b^-3*m^-1*b^2
"""
pres = parse_presentation(M137)


def cleared_gens(char, var_order, kind):
    R = ring(char, ("u", "bbar", "mbar", "b", "l", "m"), "lex")
    m, mbar, b, bbar, u, l = (R.var(v) for v in ("m", "mbar", "b", "bbar", "u", "l"))
    M = SymMat2(m, R.one(), R.zero(), mbar)
    B = SymMat2(b, R.zero(), u, bbar)
    ansatz = Ansatz.from_images(R, [M, B], [m * mbar - 1, b * bbar - 1])
    I = relator_ideal(pres, ansatz, split_relators=True)
    lon = pres.peripherals[0][1]
    k = (len(lon.letters) + 1) // 2
    E1 = evaluate_word(Word(lon.letters[:k]), ansatz.images, ansatz.inverse_images)
    E2 = evaluate_word(Word(lon.letters[k:]).inverse(), ansatz.images, ansatz.inverse_images)
    raw = [g for g in I.gens if set(g.support_variables()) not in ({"bbar", "b"}, {"mbar", "m"})]
    raw += [l * E1.c - E2.c, l * E1.d - E2.d]
    R4 = ring(char, var_order, kind)
    iu, ibb, imb, ib, il, im = (R.index[v] for v in ("u", "bbar", "mbar", "b", "l", "m"))
    pos = {v: i for i, v in enumerate(var_order)}
    cleared = []
    for g in raw:
        kk = max(mo[ibb] for mo in g.terms)
        jj = max(mo[imb] for mo in g.terms)
        terms = {}
        for mo, c in g.terms.items():
            vals = {"u": mo[iu], "b": mo[ib] + kk - mo[ibb], "l": mo[il],
                    "m": mo[im] + jj - mo[imb]}
            nm = tuple(vals[v] for v in var_order)
            terms[nm] = terms.get(nm, 0) + c
        cleared.append(R4.poly(terms))
    return PolyIdeal.from_gens(cleared, R4)


def attempt(label, char, var_order, kind, budget=6000, tmax=90):
    I = cleared_gens(char, var_order, kind)
    t0 = time.time()
    import sl2char.groebner as G
    orig = G.buchberger
    try:
        gb = buchberger(I, budget=budget)
        dt = time.time() - t0
        nfree = [g for g in gb.basis if g.degree_in(var_order[0]) == 0]
        print(f"{label}: OK {dt:.1f}s basis={len(gb.basis)} free-of-{var_order[0]}={len(nfree)}")
        return gb
    except BudgetError:
        print(f"{label}: BUDGET {time.time()-t0:.1f}s")
        return None


if __name__ != "__main__":
    import sys as _s; _s.exit(0) if False else None
which = sys.argv[1] if len(sys.argv) > 1 else "none"
if __name__ != "__main__":
    which = "none"
if which in ("all", "c2"):
    attempt("char2 elim1(u|b,l,m)", 2, ("u", "b", "l", "m"), "elim1")
if which in ("all", "c2lex"):
    attempt("char2 lex(u,b,l,m)", 2, ("u", "b", "l", "m"), "lex")
if which in ("all", "c0grev"):
    attempt("char0 grevlex(u,b,l,m)", 0, ("u", "b", "l", "m"), "grevlex")
if which in ("all", "c0b"):
    attempt("char0 elim1(b|u,l,m)", 0, ("b", "u", "l", "m"), "elim1")
if which in ("all", "c0u"):
    attempt("char0 elim1(u|b,l,m)", 0, ("u", "b", "l", "m"), "elim1")
