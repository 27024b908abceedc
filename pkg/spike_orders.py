"""Triages variable orders / staging choices for the m137 elimination."""
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


def build(char, var_order, kind, cleared=True, split_lon=True):
    R = ring(char, ("u", "bbar", "mbar", "b", "l", "m"), "lex")
    m, mbar, b, bbar, u, l = (R.var(v) for v in ("m", "mbar", "b", "bbar", "u", "l"))
    M = SymMat2(m, R.one(), R.zero(), mbar)
    B = SymMat2(b, R.zero(), u, bbar)
    ansatz = Ansatz.from_images(R, [M, B], [m * mbar - 1, b * bbar - 1])
    I = relator_ideal(pres, ansatz, split_relators=True)
    lon = pres.peripherals[0][1]
    if split_lon:
        k = (len(lon.letters) + 1) // 2
        E1 = evaluate_word(Word(lon.letters[:k]), ansatz.images, ansatz.inverse_images)
        E2 = evaluate_word(Word(lon.letters[k:]).inverse(), ansatz.images, ansatz.inverse_images)
        lgens = [l * E1.c - E2.c, l * E1.d - E2.d]
    else:
        L = evaluate_word(lon, ansatz.images, ansatz.inverse_images)
        lgens = [L.c, l - L.a]
    raw = list(I.gens) + lgens
    if not cleared:
        R6 = ring(char, var_order, kind)
        return PolyIdeal.from_gens([g.map_ring(R6) for g in raw], R6)
    raw = [g for g in raw if set(g.support_variables()) not in ({"bbar", "b"}, {"mbar", "m"})]
    R4 = ring(char, var_order, kind)
    iu, ibb, imb, ib, il, im = (R.index[v] for v in ("u", "bbar", "mbar", "b", "l", "m"))
    cleared_gens = []
    for g in raw:
        kk = max(mo[ibb] for mo in g.terms)
        jj = max(mo[imb] for mo in g.terms)
        terms = {}
        for mo, c in g.terms.items():
            vals = {"u": mo[iu], "b": mo[ib] + kk - mo[ibb], "l": mo[il],
                    "m": mo[im] + jj - mo[imb]}
            nm = tuple(vals[v] for v in var_order)
            terms[nm] = terms.get(nm, 0) + c
        cleared_gens.append(R4.poly(terms))
    return PolyIdeal.from_gens(cleared_gens, R4)


def attempt(label, I, budget=20000, report_free=None):
    t0 = time.time()
    try:
        gb = buchberger(I, budget=budget)
        msg = f"{label}: OK {time.time()-t0:.1f}s basis={len(gb.basis)}"
        if report_free:
            msg += f" {report_free}-free={sum(1 for g in gb.basis if g.degree_in(report_free) == 0)}"
        dig = max(max(len(str(abs(c))) for c in g.terms.values()) for g in gb.basis)
        print(msg + f" maxdig={dig}", flush=True)
        return gb
    except BudgetError as e:
        print(f"{label}: BUDGET {time.time()-t0:.1f}s basis={len(e.partial.basis)}", flush=True)
        return None


if __name__ == "__main__":
    which = sys.argv[1]
    budget = int(sys.argv[2]) if len(sys.argv) > 2 else 20000
    if which == "c0_b_first":
        attempt("char0 elim1(b|u,l,m)", build(0, ("b", "u", "l", "m"), "elim1"), budget, "b")
    elif which == "c0_u_mbl":
        attempt("char0 elim1(u|m,b,l)", build(0, ("u", "m", "b", "l"), "elim1"), budget, "u")
    elif which == "c0_u_llast":
        attempt("char0 elim1(u|b,m,l)", build(0, ("u", "b", "m", "l"), "elim1"), budget, "u")
    elif which == "c0_grev":
        attempt("char0 grevlex(u,b,l,m)", build(0, ("u", "b", "l", "m"), "grevlex"), budget)
    elif which == "c0_grev_llast":
        attempt("char0 grevlex(u,b,m,l)", build(0, ("u", "b", "m", "l"), "grevlex"), budget)
    elif which == "c0_lex":
        attempt("char0 lex(u,b,l,m)", build(0, ("u", "b", "l", "m"), "lex"), budget)
    elif which == "c0_6var":
        attempt("char0 elim1 6var (u|...)", build(0, ("u", "bbar", "mbar", "b", "l", "m"), "elim1", cleared=False), budget, "u")
    elif which == "c0_6var_bars_first":
        attempt("char0 elim1 6var (bbar|...)", build(0, ("bbar", "mbar", "u", "b", "l", "m"), "elim1", cleared=False), budget, "bbar")
    elif which == "c2_b_first":
        attempt("char2 elim1(b|u,l,m)", build(2, ("b", "u", "l", "m"), "elim1"), budget, "b")
    elif which == "c0_nosplit":
        attempt("char0 elim1(u|b,l,m) nosplit-lon", build(0, ("u", "b", "l", "m"), "elim1", split_lon=False), budget, "u")
