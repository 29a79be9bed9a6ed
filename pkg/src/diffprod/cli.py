"""Command-line front end: weights, table, decompose, symmetric, verify.

All rational output is exact; JSON mode encodes every rational as a string
"p" or "p/q", never as floating point.  Exit codes: 0 success, 1 a
verification failed, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from math import comb, gcd

from .nodes import (
    DuplicateNode,
    EmptyNodeSet,
    NegativeExponent,
    NodeSet,
    alternating_display,
    common_denominator_form,
    diff_products,
    diff_products_via_derivative,
    euler_sum,
    expected_euler_sum,
    nodeset_new,
)
from .partfrac import decompose, euler_sum_via_decomposition, reconstruct
from .symmetric import (
    elementary_all,
    homogeneous_brute_force,
    homogeneous_via_elementary,
    homogeneous_via_power_sums,
    newton_power_from_elementary,
    power_sums,
)

# Enumeration cost cap for the brute-force homogeneous oracle.
_BRUTE_FORCE_LIMIT = 100_000

_TOKEN = re.compile(r"[+-]?\d+(/\d+)?\Z")


class ParseError(ValueError):
    def __init__(self, position: int, token: str):
        super().__init__(f"bad token {token!r} at position {position}")
        self.position = position
        self.token = token


def parse_nodes(text: str) -> NodeSet:
    """Parse comma/whitespace separated integers and fractions "p/q".

    A leading "@" makes the rest a file name holding the same grammar.
    """
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    tokens = [t for t in re.split(r"[\s,]+", text) if t]
    values = []
    for pos, tok in enumerate(tokens):
        if not _TOKEN.match(tok):
            raise ParseError(pos, tok)
        values.append(Fraction(tok))
    return nodeset_new(values)


def fmt(q) -> str:
    """Render a rational as "p" or "p/q"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def fmt_poly(coeffs, var: str = "x") -> str:
    """Descending-power rendering, e.g. "x^2 - 3x + 2"."""
    if not coeffs:
        return "0"
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = fmt(mag)
        else:
            head = "" if mag == 1 else fmt(mag) + "*"
            body = f"{head}{var}" if d == 1 else f"{head}{var}^{d}"
        parts.append((sign, body))
    sign, body = parts[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _nodes_header(ns: NodeSet) -> dict:
    return {"nodes": [fmt(v) for v in ns.values], "m": ns.m}


def _run_weights(ns: NodeSet, n: int) -> dict:
    table = alternating_display(ns, n)
    # Shared factor of the magnitudes; scaling by it reproduces the reduced
    # common-denominator line (e.g. 3150 instead of 113400 for the 6-node set).
    scale = 1
    if n == 0 and all(r.magnitude.denominator == 1 for r in table.rows):
        scale = gcd(*(r.magnitude.numerator for r in table.rows))
    nums, den = common_denominator_form(
        [r.sign * r.numerator * scale / r.magnitude for r in table.rows]
    )
    return {
        "verb": "weights",
        **_nodes_header(ns),
        "n": n,
        "products": [fmt(A) for A in diff_products(ns)],
        "rows": [
            {
                "node": fmt(r.node),
                "signed_denominator": fmt(r.signed_denominator),
                "magnitude": fmt(r.magnitude),
                "sign": r.sign,
                "numerator": fmt(r.numerator),
            }
            for r in table.rows
        ],
        "scale": str(scale),
        "common_numerators": [str(v) for v in nums],
        "common_denominator": str(den),
        "sum": fmt(Fraction(sum(nums), den) / scale),
    }


def _print_weights(res: dict) -> None:
    print(f"nodes (m={res['m']}): {' '.join(res['nodes'])}")
    print("node  signed A  display term")
    for row in res["rows"]:
        sign = "+" if row["sign"] > 0 else "-"
        term = Fraction(row["numerator"]) / Fraction(row["magnitude"])
        print(
            f"{row['node']:>6}  {row['signed_denominator']:>10}  {sign}{fmt(term)}"
        )
    nums = " ".join(
        v if i == 0 and not v.startswith("-") else (f"+ {v.lstrip('+')}" if not v.startswith("-") else f"- {v[1:]}")
        for i, v in enumerate(res["common_numerators"])
    )
    print(f"({nums})/{res['common_denominator']} = {res['sum']}")


def _run_table(ns: NodeSet, nmax: int) -> dict:
    rows = []
    for n in range(nmax + 1):
        s = euler_sum(ns, n)
        expected = expected_euler_sum(ns, n)
        rows.append(
            {"n": n, "sum": fmt(s), "expected": fmt(expected), "match": s == expected}
        )
    return {"verb": "table", **_nodes_header(ns), "nmax": nmax, "rows": rows}


def _print_table(res: dict) -> None:
    print(f"nodes (m={res['m']}): {' '.join(res['nodes'])}")
    width = max(len(r["sum"]) for r in res["rows"])
    print(f"{'n':>3}  {'sum':>{width}}  {'expected':>{width}}  match")
    for r in res["rows"]:
        flag = "yes" if r["match"] else "NO"
        print(f"{r['n']:>3}  {r['sum']:>{width}}  {r['expected']:>{width}}  {flag}")


def _run_decompose(ns: NodeSet, n: int) -> dict:
    pfd = decompose(n, ns)
    return {
        "verb": "decompose",
        **_nodes_header(ns),
        "n": n,
        "decomposition": {
            "polynomial_part": [fmt(c) for c in pfd.polynomial_part],
            "residues": [fmt(r) for r in pfd.residues],
            "reconstructed": reconstruct(pfd),
        },
    }


def _print_decompose(res: dict) -> None:
    dec = res["decomposition"]
    part = [Fraction(c) for c in dec["polynomial_part"]]
    print(f"x^{res['n']} / prod(x - a_i), nodes: {' '.join(res['nodes'])}")
    print(f"polynomial part: {fmt_poly(part)}")
    for node, r in zip(res["nodes"], dec["residues"]):
        print(f"residue at {node}: {r}")
    print(f"reconstruction check: {'ok' if dec['reconstructed'] else 'FAILED'}")


def _brute_force_or_none(ns: NodeSet, k: int):
    if comb(ns.m + k - 1, k) > _BRUTE_FORCE_LIMIT:
        return None
    return homogeneous_brute_force(ns, k)


def _run_symmetric(ns: NodeSet, kmax: int) -> dict:
    e = elementary_all(ns, kmax)
    p = power_sums(ns, max(kmax, 1))
    h_e = homogeneous_via_elementary(e, kmax)
    h_p = homogeneous_via_power_sums(p, kmax)
    h_bf = [_brute_force_or_none(ns, k) for k in range(kmax + 1)]
    newton = newton_power_from_elementary(e, max(kmax, 1))
    triple = all(
        h_e[k] == h_p[k] and (h_bf[k] is None or h_bf[k] == h_e[k])
        for k in range(kmax + 1)
    )
    return {
        "verb": "symmetric",
        **_nodes_header(ns),
        "kmax": kmax,
        "tables": {
            "e": [fmt(v) for v in e],
            "p": [fmt(v) for v in p],
            "h_via_elementary": [fmt(v) for v in h_e],
            "h_via_power_sums": [fmt(v) for v in h_p],
            "h_brute_force": [None if v is None else fmt(v) for v in h_bf],
        },
        "agreement": {
            "h_triple": triple,
            "newton_round_trip": newton == p,
        },
    }


def _print_symmetric(res: dict) -> None:
    print(f"nodes (m={res['m']}): {' '.join(res['nodes'])}")
    t = res["tables"]
    print(f"e: {' '.join(t['e'])}")
    print(f"p: {' '.join(t['p'])}")
    print(f"h (elementary recurrence): {' '.join(t['h_via_elementary'])}")
    print(f"h (power-sum recurrence):  {' '.join(t['h_via_power_sums'])}")
    print(
        "h (brute force):           "
        + " ".join("-" if v is None else v for v in t["h_brute_force"])
    )
    agree = res["agreement"]
    print(f"h paths agree: {'yes' if agree['h_triple'] else 'NO'}")
    print(f"newton round trip: {'yes' if agree['newton_round_trip'] else 'NO'}")


def _run_verify(ns: NodeSet, nmax: int) -> dict:
    checks = []

    def check(name: str, ok: bool) -> None:
        checks.append({"name": name, "ok": bool(ok)})

    products = diff_products(ns)
    check("difference products match derivative route",
          products == diff_products_via_derivative(ns))
    check("sign parity (-1)^(m-1-i)",
          all((-1) ** (ns.m - 1 - i) * A > 0 for i, A in enumerate(products)))
    check("sum is 0 for n <= m-2",
          all(euler_sum(ns, n) == 0 for n in range(max(ns.m - 1, 0))))
    check("sum matches closed form for n <= nmax",
          all(euler_sum(ns, n) == expected_euler_sum(ns, n)
              for n in range(nmax + 1)))
    if ns.m >= 2:
        check("decomposition route reproduces the sum",
              all(euler_sum_via_decomposition(ns, n) == euler_sum(ns, n)
                  for n in range(nmax + 1)))
    check("decompositions reconstruct exactly",
          all(reconstruct(decompose(n, ns)) for n in range(nmax + 1)))

    kmax = min(nmax, 8)
    e = elementary_all(ns, kmax)
    p = power_sums(ns, max(kmax, 1))
    h_e = homogeneous_via_elementary(e, kmax)
    h_p = homogeneous_via_power_sums(p, kmax)
    check("homogeneous recurrences agree", h_e == h_p)
    check("homogeneous recurrences match brute force",
          all(_brute_force_or_none(ns, k) in (None, h_e[k])
              for k in range(kmax + 1)))
    check("newton round trip", newton_power_from_elementary(e, max(kmax, 1)) == p)

    return {
        "verb": "verify",
        **_nodes_header(ns),
        "nmax": nmax,
        "checks": checks,
        "all_identities_hold": all(c["ok"] for c in checks),
    }


def _print_verify(res: dict) -> None:
    print(f"nodes (m={res['m']}): {' '.join(res['nodes'])}, nmax={res['nmax']}")
    for c in res["checks"]:
        print(f"{'ok  ' if c['ok'] else 'FAIL'}  {c['name']}")
    print("all identities hold" if res["all_identities_hold"]
          else "verification FAILED")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffprod",
        description="Exact difference-product sums, their closed forms, "
                    "and partial fraction decompositions.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, help_text):
        sp = sub.add_parser(verb, help=help_text)
        sp.add_argument("nodes", help="node list, e.g. \"3 8 12 15 17 18\" or @file")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        return sp

    sp = add("weights", "difference products and the alternating-sign display")
    sp.add_argument("--n", type=int, default=0, help="power in the numerators")
    sp = add("table", "tabulate the sums against their closed forms")
    sp.add_argument("--nmax", type=int, default=None, help="largest power (default m+4)")
    sp = add("decompose", "partial fraction decomposition of x^n over the nodes")
    sp.add_argument("--n", type=int, required=True, help="numerator power")
    sp = add("symmetric", "elementary, power-sum, and homogeneous tables")
    sp.add_argument("--kmax", type=int, default=None, help="table depth (default m+4)")
    sp = add("verify", "run every identity check; exit 0 iff all hold")
    sp.add_argument("--nmax", type=int, default=None, help="largest power (default m+4)")
    return parser


def render_json(result: dict) -> str:
    return json.dumps(result, indent=2)


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ns = parse_nodes(args.nodes)
        if args.verb == "weights":
            if args.n < 0:
                raise NegativeExponent(args.n)
            result = _run_weights(ns, args.n)
        elif args.verb == "table":
            nmax = args.nmax if args.nmax is not None else ns.m + 4
            if nmax < 0:
                raise NegativeExponent(nmax)
            result = _run_table(ns, nmax)
        elif args.verb == "decompose":
            result = _run_decompose(ns, args.n)
        elif args.verb == "symmetric":
            kmax = args.kmax if args.kmax is not None else ns.m + 4
            if kmax < 0:
                raise NegativeExponent(kmax)
            result = _run_symmetric(ns, kmax)
        else:
            nmax = args.nmax if args.nmax is not None else ns.m + 4
            if nmax < 0:
                raise NegativeExponent(nmax)
            result = _run_verify(ns, nmax)
    except (ParseError, DuplicateNode, EmptyNodeSet, NegativeExponent, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.format == "json":
        print(render_json(result))
    else:
        printer = {
            "weights": _print_weights,
            "table": _print_table,
            "decompose": _print_decompose,
            "symmetric": _print_symmetric,
            "verify": _print_verify,
        }[args.verb]
        printer(result)

    if args.verb == "verify" and not result["all_identities_hold"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
