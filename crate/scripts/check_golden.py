"""Recompute golden bases with sympy and compare them with the files.

Usage: python3 scripts/check_golden.py FILE...

Each file holds a header `# order=degrevlex modulus=P nvars=N` and the
reduced basis of the ideal generated by its own lines. sympy recomputes the
reduced basis of those generators over GF(P) under grevlex with
x1 > ... > xn > y1 > ... > yn; the two sets must coincide.
"""

import sys

import sympy


def parse(path):
    lines = [l.strip() for l in open(path) if l.strip()]
    header = dict(f.split("=") for f in lines[0].lstrip("#").split())
    nvars = int(header["nvars"])
    n = nvars // 2
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    gens = sympy.symbols(names)
    local = dict(zip(names, gens))
    polys = [sympy.sympify(l.replace("^", "**"), locals=local) for l in lines[1:]]
    return int(header["modulus"]), gens, polys


def normalize(polys, gens, p):
    out = set()
    for f in polys:
        poly = sympy.Poly(f, *gens, modulus=p)
        lc = poly.LC(order="grevlex")
        out.add(poly.mul_ground(sympy.invert(lc, p)).as_expr())
    return out


def main():
    ok = True
    for path in sys.argv[1:]:
        p, gens, polys = parse(path)
        gb = sympy.groebner(polys, *gens, order="grevlex", modulus=p)
        same = normalize(polys, gens, p) == normalize(gb.exprs, gens, p)
        print(f"{'ok' if same else 'MISMATCH'} {path} ({len(polys)} elements)")
        ok &= same
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
