#!/usr/bin/env python3
"""Independent checks of the shipped witness cases.

Each case is re-verified with sympy's own Groebner bases: the radical
condition, the vanishing of the system, the height, the rational point and
the bad-prime set. Results are compared with the frozen expectations in
expected.json and with what the charp binary reports.
"""

import argparse
import itertools
import json
import subprocess
import sys
from pathlib import Path

import sympy
from sympy import QQ, Poly, Rational, groebner, factorint

EXPONENT_CAP = 16


def parse_poly(obj, gens, names):
    if isinstance(obj, str):
        local = {n: g for n, g in zip(names, gens)}
        return sympy.sympify(obj, locals=local, rational=True)
    expr = sympy.Integer(0)
    for term in obj:
        mono = sympy.Integer(1)
        for g, e in zip(gens, term["exps"]):
            mono *= g**e
        expr += Rational(term["coeff"]) * mono
    return sympy.expand(expr)


class Case:
    def __init__(self, path):
        doc = json.loads(Path(path).read_text())
        ring = doc["ring"]
        self.order = ring.get("order", "grevlex")
        self.names = ring["vars"]
        self.gens = sympy.symbols(self.names)
        sys_ = doc["system"]
        self.n, self.r = sys_["n"], sys_["r"]
        xs = [f"X{i + 1}" for i in range(self.n)] + [f"Y{j + 1}" for j in range(self.r)]
        self.sys_gens = sympy.symbols(xs)
        self.equations = [parse_poly(e, self.sys_gens, xs) for e in sys_["equations"]]
        w = doc["witness"]
        p = lambda f: parse_poly(f, self.gens, self.names)
        self.I = [p(f) for f in w["I"]]
        self.m = [p(f) for f in w["m"]]
        self.x = [p(f) for f in w["x"]]
        self.y = [p(f) for f in w["y"]]
        self.b = None if w.get("b") is None else [Rational(c) for c in w["b"]]
        self.claimed_n = w["claimed_n"]


def basis(polys, gens, order, domain=QQ):
    polys = [f for f in polys if f != 0]
    if not polys:
        return None
    return groebner(polys, *gens, order=order, domain=domain)


def member(f, G, gens, order):
    f = sympy.expand(f)
    if f == 0:
        return True
    if G is None:
        return False
    return G.reduce(f)[1] == 0


def dimension(polys, gens, order):
    G = basis(polys, gens, order)
    if G is None:
        return len(gens)
    leads = [Poly(g, *gens).monoms(order=order)[0] for g in G.exprs]
    best = 0
    for k in range(len(gens) + 1):
        for subset in itertools.combinations(range(len(gens)), k):
            if all(any(e > 0 and i not in subset for i, e in enumerate(lead)) for lead in leads):
                best = max(best, k)
    return best


def condition1(c):
    ideal = c.x + c.I
    G = basis(ideal, c.gens, c.order)
    Gm = basis(c.m, c.gens, c.order)
    if not all(member(f, Gm, c.gens, c.order) for f in ideal):
        return False
    for g in c.m:
        if not any(member(g**e, G, c.gens, c.order) for e in range(1, EXPONENT_CAP + 1)):
            return False
    return True


def condition2(c, p=None):
    kw = {} if p is None else {"modulus": p}
    polys = [f for f in c.I if f != 0]
    G = groebner(polys, *c.gens, order=c.order, **kw) if polys else None
    images = dict(zip(c.sys_gens, c.x + c.y))
    out = []
    for F in c.equations:
        value = sympy.expand(F.subs(images, simultaneous=True))
        if p is not None and value != 0:
            value = Poly(value, *c.gens, modulus=p).as_expr()
        out.append(value == 0 or (G is not None and G.reduce(value)[1] == 0))
    return out


def height(c):
    return dimension(c.I, c.gens, c.order) - dimension(c.m, c.gens, c.order)


def condition3(c):
    if c.b is None:
        return None
    point = [g - v for g, v in zip(c.gens, c.b)]
    same = list(basis(c.m, c.gens, c.order).exprs) == list(basis(point, c.gens, c.order).exprs)
    at_b = dict(zip(c.gens, c.b))
    return same and all(sympy.expand(f.subs(at_b)) == 0 for f in c.I)


def bad_primes(c):
    out = {}

    def note(n, reason):
        for p in factorint(abs(int(n))):
            out.setdefault(p, set()).add(reason)

    for f in c.I + c.m + c.x + c.y:
        if f == 0:
            continue
        for coeff in Poly(f, *c.gens).coeffs():
            note(Rational(coeff).q, "denominator")
    for v in c.b or []:
        note(v.q, "denominator")
    for f in c.I + c.m + c.x:
        if f != 0:
            note(Rational(Poly(f, *c.gens).coeffs(order=c.order)[0]).p, "leading-coefficient")
    return {p: sorted(r) for p, r in out.items()}


def analyse(c):
    c1 = condition1(c)
    c2 = condition2(c)
    h = height(c)
    c3 = condition3(c)
    passed = c1 and all(c2) and h == c.claimed_n and c3 is not False
    return {
        "condition1": c1,
        "condition2": c2,
        "height": h,
        "condition3": c3,
        "passed": passed,
        "bad_primes": {str(p): r for p, r in sorted(bad_primes(c).items())},
    }


def report_status(name, failures):
    bad = any(f.startswith(name + ":") for f in failures)
    print(f"{name}: {'FAILED' if bad else 'ok'}")


def run_cli(cli, *args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--primes", default="2..60")
    ap.add_argument("cases", type=Path)
    args = ap.parse_args()
    expected = json.loads((args.cases / "expected.json").read_text())
    failures = []
    for path in sorted(args.cases.glob("*.json")):
        if path.name == "expected.json":
            continue
        name = path.stem
        c = Case(path)
        got = analyse(c)
        want = expected.get(name)
        if want is None:
            failures.append(f"{name}: no frozen expectation")
            continue
        for key in ("passed", "height", "bad_primes"):
            if got[key] != want[key]:
                failures.append(f"{name}: sympy {key} {got[key]!r} != frozen {want[key]!r}")

        code, out = run_cli(args.cli, "verify", str(path), "--char0")
        report = json.loads(out)
        if (code == 0) != want["passed"] or report["passed"] != want["passed"]:
            failures.append(f"{name}: charp verify exit {code} disagrees with frozen verdict")
        if report["height"]["computed"] != got["height"]:
            failures.append(f"{name}: charp height {report['computed_n']} != sympy {got['height']}")
        if report["condition2"] != got["condition2"]:
            failures.append(f"{name}: charp condition2 {report['condition2']} != sympy {got['condition2']}")

        code, out = run_cli(args.cli, "sweep", str(path), "--primes", args.primes)
        if not want["passed"]:
            if code != 1:
                failures.append(f"{name}: refused sweep should exit 1, got {code}")
            report_status(name, failures)
            continue
        sweep = json.loads(out)
        lo, hi = (int(v) for v in args.primes.split(".."))
        in_range = {p: r for p, r in want["bad_primes"].items() if lo <= int(p) <= hi}
        reported = {str(e["prime"]): sorted(e["reasons"]) for e in sweep["bad_primes"]}
        if reported != in_range:
            failures.append(f"{name}: charp bad primes {reported} != frozen {in_range}")
        if code != 0 or not sweep["all_passed"]:
            failures.append(f"{name}: sweep did not pass (exit {code})")
        # Condition 2 mod p, recomputed over GF(p) for the first few good primes.
        for entry in sweep["per_prime"][:4]:
            p = entry["prime"]
            mod = condition2(c_mod(c, p), p)
            if entry["result"]["condition2"] != mod:
                failures.append(f"{name}: condition2 mod {p} {entry['result']['condition2']} != sympy {mod}")
        report_status(name, failures)

    for f in failures:
        print(f, file=sys.stderr)
    return 1 if failures else 0


def c_mod(c, p):
    """Copy of the case with witness coefficients reduced modulo p."""
    def red(f):
        if f == 0:
            return f
        P = Poly(f, *c.gens)
        terms = 0
        for mono, coeff in P.terms():
            q = Rational(coeff)
            v = (q.p * pow(q.q, -1, p)) % p
            terms += v * sympy.prod(g**e for g, e in zip(c.gens, mono))
        return sympy.expand(terms)

    out = Case.__new__(Case)
    out.__dict__.update(c.__dict__)
    out.I = [red(f) for f in c.I]
    out.x = [red(f) for f in c.x]
    out.y = [red(f) for f in c.y]
    return out


if __name__ == "__main__":
    sys.exit(main())
