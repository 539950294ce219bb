#!/usr/bin/env python3
"""Regenerates fixtures/*.json from hand transcriptions of the published tables.

Every expression below is typed exactly as printed, including misprints;
the C++ checks decide what agrees. Run from the repository root:

    python3 tools/transcribe_fixtures.py
"""

import json
import pathlib

import sympy as sp

# Symbol order matches the library's standard table (alphabetical).
TABLE = ["E", "dwp", "e1", "e2", "e3", "eta", "g1", "g2", "g3", "lambda",
         "n", "omega", "pbar", "wp", "x", "xi"]

E, e1, e2, e3, eta, g1, g2, g3, lam, n, omega, pbar, xi = sp.symbols(
    "E e1 e2 e3 eta g1 g2 g3 lambda n omega pbar xi")
u = sp.symbols("u0:8")
R = sp.Rational


def poly_doc(expr, names=None):
    expr = sp.expand(sp.sympify(expr))
    if names is None:
        used = {s.name for s in expr.free_symbols}
        unknown = used - set(TABLE)
        if unknown:
            raise ValueError(f"unknown symbols {unknown} in {expr}")
        names = [s for s in TABLE if s in used]
    gens = [sp.Symbol(s) for s in names]
    terms = []
    if expr != 0:
        p = sp.Poly(expr, *gens) if gens else None
        items = p.terms() if p is not None else [((), expr)]
        for exps, c in items:
            c = sp.Rational(c)
            coeff = str(c.p) if c.q == 1 else f"{c.p}/{c.q}"
            terms.append({"coeff": coeff, "exp": list(exps)})
    return {"symbols": names, "terms": terms}


def diff_doc(expr):
    expr = sp.expand(expr)
    top = max(int(s.name[1:]) for s in expr.free_symbols)
    return poly_doc(expr, [f"u{j}" for j in range(top + 1)])


def write(name, doc):
    path = pathlib.Path("fixtures") / name
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print("wrote", path)


def kdv():
    T = {
        1: u[0],
        2: u[0]**2,
        3: u[1]**2 + 2*u[0]**3,
        4: u[2]**2 + 10*u[0]*u[1]**2 + 5*u[0]**4,
        5: u[3]**2 + 14*u[0]*u[2]**2 + 70*u[0]**2*u[1]**2 + 14*u[0]**5,
        6: u[4]**2 - 20*u[2]**3 + 18*u[0]*u[3]**2 - 35*u[1]**4 + 126*u[0]**2*u[2]**2
           + 420*u[0]**3*u[1]**2 + 42*u[0]**6,
    }
    write("kdv_densities.json", {"densities": [{"k": k, "T": diff_doc(v)} for k, v in T.items()]})


def halphen():
    # Rows r = 0..6, columns n = 0..6, as laid out in the table.
    rows = [
        [1, 1, 1, 1, 1, 1, 1],
        [0, 0, 0, 0, 0, 0, 0],
        [0, 0, g2/12, R(3, 20)*g2, g2/5, g2/4, R(3, 10)*g2],
        [0, 0, 0, g3/10, g3/7, R(5, 28)*g3, R(3, 14)*g3],
        [0, 0, 0, 0, R(5, 336)*g2**2, R(7, 240)*g2**2, R(17, 400)*g2**2],
        [0, 0, 0, 0, 0, g2*g3/30, R(87, 1540)*g2*g3],
        [0, 0, 0, 0, 0, 0, R(15, 4928)*g2**3 + g3**2/55],
    ]
    cells = [{"n": col, "r": r, "value": poly_doc(rows[r][col])}
             for r in range(7) for col in range(7)]
    write("halphen_table.json", {"cells": cells})


def periods():
    K = {
        0: 2*omega,
        1: -2*xi,
        2: g2*omega/6 - g1*xi/3,
        3: R(1, 30)*(g1*g2 + 6*g3)*omega - R(1, 30)*(2*g1**2 + 9*g2)*xi,
        4: R(1, 840)*(6*g1**2*g2 + 25*g2**2 + 36*g1*g3)*omega
           - R(1, 210)*(3*g1**2 + 26*g1*g2 + 60*g3)*xi,
        5: R(1, 2520)*(4*g1**3*g2 + 33*g1*g2**2 + 24*g1**2*g3 + 168*g2*g3)*omega
           - R(1, 2520)*(8*g1**2 + 102*g1**2*g2 + 147*g2**2 + 300*g1*g3)*xi,
    }
    write("period_integrals.json", {"general": [{"n": k, "K": poly_doc(v)} for k, v in K.items()]})


def faulhaber():
    F = {
        1: lam,
        2: lam**2,
        3: R(1, 3)*lam**2*(4*lam - 1),
        4: R(1, 3)*lam**2*(6*lam**2 - 4*lam + 1),
        5: R(1, 5)*lam**2*(16*lam**3 - 20*lam**2 + 12*lam - 3),
        6: R(1, 3)*lam**2*(16*lam**4 - 32*lam**2 + 34*lam**2 - 20*lam + 5),
    }
    calF = {
        1: -4*xi*lam,
        2: (-R(4, 3)*g1*xi + R(2, 3)*g2*omega)*lam**2,
        3: (-R(4, 15)*g1**2*xi + R(2, 15)*g1*g2*omega)*lam**2*(4*lam - 1)
           - R(8, 5)*g2*xi*lam**2*(3*lam - 2) + R(8, 5)*g3*omega*lam**2*(2*lam - 3),
        4: (R(4, 21)*g1**3*xi - R(2, 21)*g1**2*g2*omega)*lam**2*(6*lam**2 - 4*lam + 1)
           - R(8, 21)*g1*g2*xi*lam**2*(26*lam**2 - 29*lam + 9)
           + R(8, 7)*g1*g3*omega*lam**2*(3*lam**2 - 2*lam - 3)
           + R(2, 21)*g2**2*omega*lam**2*(25*lam**2 - 40*lam + 24)
           - R(32, 7)*g3*xi*lam**2*(5*lam**2 - 15*lam + 9),
    }
    write("faulhaber_intro.json", {
        "classical": [{"m": m, "F": poly_doc(v)} for m, v in F.items()],
        "elliptic": [{"m": m, "F": poly_doc(v)} for m, v in calF.items()],
        # The remark's x^3 coefficient of F_3 after lambda = (x^2+x)/2.
        "x3_probe": poly_doc(g2*xi - 2*g3*omega),
    })


def reduced_faulhaber():
    L = lam
    W = {
        1: -eta*4*L,
        2: g2*omega*R(2, 3)*L**2,
        3: -g2*eta*R(8, 5)*L**2*(3*L - 2) + g3*omega*R(8, 5)*L**2*(2*L - 3),
        4: g2**2*omega*R(2, 21)*L**2*(25*L**2 - 40*L + 24)
           - g3*eta*R(32, 7)*L**2*(5*L**2 - 15*L + 9),
        5: -g2**2*eta*R(8, 15)*L**2*(49*L**3 - 140*L**2 + 168*L - 72)
           + g2*g3*omega*R(16, 15)*L**2*(28*L**3 - 105*L**2 + 126*L - 54),
        6: g2**3*omega*R(4, 11)*L**2*(45*L**4 - 200*L**3 + 416*L**2 - 400*L + 144)
           - g2*g3*eta*R(192, 55)*L**2*(87*L**4 - 515*L**3 + 1179*L**2 - 1206*L + 450)
           + g3**2*omega*R(96, 55)*L**2*(56*L**4 - 420*L**3 + 1197*L**2 - 1368*L + 540),
        7: -g2**3*eta*R(16, 65)*L**2*(847*L**5 - 5390*L**4 + 17248*L**3 - 30536*L**2 + 26928*L - 9072)
           + g2**2*g3*omega*R(16, 455)*L**2*(9526*L**5 - 71995*L**4 + 250404*L**3 - 472428*L**2
                                            + 433224*L - 149256)
           - g3**2*eta*R(384, 91)*L**2*(220*L**5 - 2310*L**4 + 10395*L**3 - 22770*L**2 + 22572*L - 8100),
        8: g2**4*omega*R(2, 21)*L**2*(1521*L**6 - 13104*L**5 + 59696*L**4 - 165568*L**3 + 269568*L**2
                                     - 224640*L + 72576)
           - g2**2*g3*eta*R(64, 35)*L**2*(2171*L**6 - 22477*L**5 + 113295*L**4 - 336492*L**3
                                         + 570492*L**2 - 485784*L + 158760)
           + g2*g3**2*omega*R(64, 5)*L**2*(182*L**6 - 2184*L**5 + 12285*L**4 - 38844*L**3 + 68094*L**2
                                          - 58968*L + 19440),
    }
    write("reduced_faulhaber.json", {"reduced": [{"m": m, "F": poly_doc(v)} for m, v in W.items()]})


def elliptic_bernoulli():
    B = {
        2: 3*g2*omega,
        4: -R(3, 5)*g3*omega + R(2, 5)*g2*eta,
        6: R(2, 7)*g2**2*omega - R(36, 7)*g3*eta,
        8: -R(36, 5)*g2*g3*omega + R(24, 5)*g2**2*eta,
        10: R(72, 11)*(g2**3 + 18*g3**2)*omega - R(2160, 11)*g2*g3*eta,
        12: -R(298512, 455)*g2**2*g3*omega + R(2592, 455)*(49*g2**3 + 750*g3**2)*eta,
        14: 216*g2*(g2**3 + 36*g3**2)*omega - 9072*g2**2*g3*eta,
        16: -R(15552, 85)*g3*(1039*g2**3 + 4500*g3**2)*omega
            + R(10368, 85)*g2*(539*g2**3 + 18000*g3**2)*eta,
    }
    classical = {0: 1, 2: R(1, 6), 4: -R(1, 30), 6: R(1, 42), 8: -R(1, 30), 10: R(5, 66), 12: -R(691, 2730)}
    write("elliptic_bernoulli.json", {
        "numbers": [{"index": i, "B": poly_doc(v)} for i, v in B.items()],
        "classical": [{"index": i, "value": str(v)} for i, v in classical.items()],
    })


def principal_parts():
    c = {2: g2/20, 3: g3/28, 4: g2**2/1200, 5: R(3, 6160)*g2*g3}
    BH = {k: 2*k*sp.factorial(2*k - 2)*c[k] for k in c}
    entries = [
        {"r": 2, "series": n*c[2], "factor": n, "k": 2, "bh_factor": n/8},
        {"r": 3, "series": n*c[3], "factor": n, "k": 3, "bh_factor": n/144},
        {"r": 4, "series": n*c[4] + n*(n - 1)/2*c[2]**2, "factor": n*(3*n - 1)/2, "k": 4,
         "bh_factor": n*(3*n - 1)/11520},
        {"r": 5, "series": n*c[5] + n*(n - 1)*c[2]*c[3], "factor": n*(22*n - 19)/3, "k": 5,
         "bh_factor": n*(22*n - 19)/1209600},
    ]
    out = []
    for e in entries:
        out.append({
            "r": e["r"],
            "series": poly_doc(e["series"]),
            "closed": poly_doc(e["factor"] * c[e["k"]]),
            "via_bh": poly_doc(e["bh_factor"] * BH[e["k"]]),
            "k": e["k"],
            "bh_factor": poly_doc(e["bh_factor"]),
        })
    write("principal_parts.json", {"coefficients": out})


def lame():
    b = {
        2: -g2/120*n*(n + 1)*(2*n - 1)*(2*n + 1)*(2*n + 3),
        3: -g3/840*n*(n + 1)*(2*n - 3)*(2*n - 1)*(2*n + 1)*(2*n + 3)*(2*n + 5),
        4: g2**2/201600*n*(n - 1)*(n + 1)*(2*n - 1)*(2*n + 1)*(2*n + 3)
           * (56*n**4 + 76*n**3 - 94*n**2 + 201*n + 630),
    }
    a = {
        1: n*(n + 1)/2*pbar,
        2: -g2/480*(n - 1)*n*(n + 1)*(6 + 25*n + 16*n**2),
        3: -g3/3360*(n - 2)*(n - 1)*n*(n + 1)*(45 + 243*n + 247*n**2 + 64*n**3)
           - g2*pbar/960*(n - 2)*(n - 1)*n**2*(n + 1)**2*(27 + 16*n),
        4: g2**2/3225600*(n - 3)*(n - 2)*(n - 1)*n*(n + 1)
           * (-2520 - 12942*n - 10315*n**2 + 4565*n**3 + 6880*n**4 + 1792*n**5)
           - g3*pbar/13440*(n - 3)*(n - 2)*(n - 1)*n**2*(n + 1)**2*(600 + 563*n + 128*n**2),
    }
    ahat = {
        1: pbar/2,
        2: -g2/480*(6 + 25*n + 16*n**2),
        3: -g3/3360*(45 + 243*n + 247*n**2 + 64*n**3) - g2*pbar/960*n*(n + 1)*(27 + 16*n),
        4: g2**2/3225600*(-2520 - 12942*n - 10315*n**2 + 4565*n**3 + 6880*n**4 + 1792*n**5)
           - g3*pbar/13440*n*(n + 1)*(600 + 563*n + 128*n**2),
        5: g2*g3/17740800*(-28350 - 145305*n - 98919*n**2 + 130400*n**3 + 185250*n**4 + 78480*n**5
                           + 11264*n**6)
           + g2**2*pbar/6451200*n*(n + 1)*(-22050 - 19707*n + 3217*n**2 + 7328*n**3 + 1792*n**4),
        6: g3**2/3228825600*(585728*n**7 + 6077568*n**6 + 24055710*n**5 + 42381080*n**4 + 22989372*n**3
                             - 21506058*n**2 - 26135595*n - 4677750)
           - g2**3/664215552000*(4100096*n**8 + 23905024*n**7 + 14017296*n**6 - 192219241*n**5
                                 - 520562096*n**4 - 391295859*n**3 + 180468864*n**2 + 310981356*n
                                 + 62868960)
           + g2*g3*pbar/70963200*n*(n + 1)*(22528*n**5 + 171950*n**4 + 427045*n**3 + 215715*n**2
                                            - 568458*n - 612360),
        7: -g2**2*g3/1549836288000*(16400384*n**9 + 160552704*n**8 + 520180864*n**7 + 153752039*n**6
                                    - 2909673459*n**5 - 6672918014*n**4 - 4259587899*n**3
                                    + 2522284551*n**2 + 3574728990*n + 681080400)
           + g3**2*pbar/6457651200*n*(n + 1)*(585728*n**6 + 6709056*n**5 + 29129901*n**4 + 54097586*n**3
                                              + 19647288*n**2 - 62676225*n - 60031125)
           - g2**3*pbar/1328431104000*n*(n + 1)*(4100096*n**7 + 25442560*n**6 + 8937936*n**5
                                                 - 279814135*n**4 - 748894946*n**3 - 399303225*n**2
                                                 + 770746914*n + 806818320),
    }
    write("lame_symbolic.json", {
        "b": [{"k": k, "b": poly_doc(v)} for k, v in b.items()],
        "a": [{"k": k, "a": poly_doc(v)} for k, v in a.items()],
    })
    write("lame_reduced.json", {"reduced": [{"k": k, "a_hat": poly_doc(v)} for k, v in ahat.items()]})

    P = {
        1: E + pbar,
        2: E**2 + 3*pbar*E - R(3, 2)*g2,
        3: E**3 + 6*pbar*E**2 - R(45, 4)*g2*E - R(135, 4)*g3 - R(45, 2)*g2*pbar,
        4: E**4 + 10*pbar*E**3 - R(181, 4)*g2*E**2 - (R(1295, 4)*g3 + R(455, 2)*g2*pbar)*E
           + R(273, 2)*g2**2 - 875*g3*pbar,
        5: E**5 + 15*pbar*E**4 - R(531, 4)*g2*E**3 - (R(6615, 4)*g3 + R(4815, 4)*g2*pbar)*E**2
           + (R(18117, 8)*g2**2 - R(42525, 4)*g3*pbar)*E + R(178605, 8)*g2*g3 + R(13365, 2)*g2**2*pbar,
    }
    # Monic radicands as printed for n = 1..3 (n = 2 divided by its leading 4).
    radicands = {
        1: E**3 - g2/4*E + g3/4,
        2: (4*E**5 - 21*g2*E**3 - 27*g3*E**2 + 27*g2**2*E + 81*g2*g3)/4,
        3: E**7 - R(63, 2)*g2*E**5 - R(297, 2)*g3*E**4 + R(4185, 16)*g2**2*E**3
           + R(18225, 8)*g2*g3*E**2 - R(3375, 16)*(g2**3 - 27*g3**2)*E,
    }
    write("lame_numerators.json", {
        "numerators": [{"n": k, "P": poly_doc(v)} for k, v in P.items()],
        "radicands": [{"n": k, "R": poly_doc(v)} for k, v in radicands.items()],
    })


def main():
    pathlib.Path("fixtures").mkdir(exist_ok=True)
    kdv()
    halphen()
    periods()
    faulhaber()
    reduced_faulhaber()
    elliptic_bernoulli()
    principal_parts()
    lame()


if __name__ == "__main__":
    main()
