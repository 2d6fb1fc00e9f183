"""Command line front end.

Subcommands: resolve, verify, invariants, dg-table, dg-verify,
homology-check, family.  Exit codes: 0 success, 1 a check failed,
2 bad input.  All output is deterministic for fixed input and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys

from .commutation import (
    CommutationMatrix,
    FieldSpecialization,
    commutation_from_json,
    scalar_to_json,
)
from .dg import (
    check_associativity,
    check_augmentation,
    check_color_commutativity,
    check_leibniz,
    check_odd_squares,
    multiplication_table,
)
from .errors import NotStableError, SkewekError
from .homology import check_exactness, report_to_json
from .ideal import MonomialIdeal, ideal_from_json, ideal_to_json, require_stable
from .invariants import (
    betti_formula,
    betti_from_resolution,
    cm_regularity,
    graded_betti,
    poincare_series,
    projective_dimension,
    tor_regularity,
)
from .families import power_of_maximal_ideal, random_stable_ideal, s_n_ideal
from .render import (
    render_coefficient,
    render_matrix,
    render_monomial,
    render_symbol,
    render_term,
)
from .resolution import (
    build_resolution,
    check_quotient_relation,
    is_minimal,
    symbol_to_json,
    verify_complex,
)


def _load(args) -> tuple[MonomialIdeal, CommutationMatrix | None]:
    if getattr(args, "ideal", None):
        obj = json.loads(args.ideal)
    elif getattr(args, "input", None):
        if args.input == "-":
            obj = json.load(sys.stdin)
        else:
            with open(args.input) as fh:
                obj = json.load(fh)
    else:
        raise SkewekError("need --input FILE or --ideal JSON")
    if not isinstance(obj, dict):
        raise SkewekError("input must be a JSON object")
    I, removed = ideal_from_json(obj)
    for g in removed:
        print(f"warning: dropped redundant generator {render_monomial(g)}", file=sys.stderr)
    cm = None
    if "commutation" in obj:
        cm = commutation_from_json(obj["commutation"])
        if cm.n != I.n:
            raise SkewekError(f"commutation matrix has n={cm.n}, ideal has n={I.n}")
    return I, cm


def _specialization(args, I, cm) -> FieldSpecialization | None:
    if getattr(args, "mode", "symbolic") != "numeric":
        return None
    if cm is None or cm.mode != "numeric":
        raise SkewekError("numeric mode needs a numeric commutation matrix in the input")
    return cm.specialization()


def _coef_text(phi, coef, mono) -> str:
    if phi is None:
        return render_coefficient(coef, mono)
    val = phi.evaluate(coef)
    mo = render_monomial(mono)
    return str(val) if mo == "1" else f"{val}*{mo}"


def _term_json(phi, coef, mono, sym=None) -> dict:
    out = scalar_to_json(coef)
    out["monomial"] = list(mono)
    if phi is not None:
        out["value"] = str(phi.evaluate(coef))
    if sym is not None:
        out["symbol"] = symbol_to_json(sym)
    return out


def cmd_resolve(args) -> int:
    I, cm = _load(args)
    phi = _specialization(args, I, cm)
    require_stable(I)
    cx = build_resolution(I)
    if args.format == "json":
        matrices = []
        for q in range(1, len(cx.bases)):
            mat = cx.matrices[q - 1]
            entries = []
            for row, col in sorted(mat):
                terms = [_term_json(phi, coef, mono) for coef, mono in mat[(row, col)]]
                entries.append({"row": row + 1, "col": col + 1, "terms": terms})
            matrices.append({"degree": q, "entries": entries})
        out = dict(ideal_to_json(I))
        out["ranks"] = list(cx.ranks())
        out["bases"] = [[symbol_to_json(s) for s in basis] for basis in cx.bases]
        out["matrices"] = matrices
        print(json.dumps(out, indent=2))
        return 0
    print(f"n: {I.n}")
    print("generators: " + ", ".join(render_monomial(g) for g in I.generators))
    print("ranks: " + " ".join(str(r) for r in cx.ranks()))
    for q, basis in enumerate(cx.bases):
        print(f"basis[{q}]: " + ", ".join(render_symbol(s) for s in basis))
    for q in range(1, len(cx.bases)):
        print(f"d[{q}]:")
        if phi is None:
            print(render_matrix(cx, q))
        else:
            rows, cols = len(cx.bases[q - 1]), len(cx.bases[q])
            cells = [["0"] * cols for _ in range(rows)]
            for (i, j), entry in cx.matrices[q - 1].items():
                cells[i][j] = " + ".join(_coef_text(phi, c, m) for c, m in entry)
            widths = [max(len(cells[r][c]) for r in range(rows)) for c in range(cols)]
            for r in range(rows):
                print("[ " + "  ".join(cells[r][c].ljust(widths[c]) for c in range(cols)) + " ]")
    return 0


def cmd_verify(args) -> int:
    I, _cm = _load(args)
    require_stable(I)
    cx = build_resolution(I)
    square = verify_complex(cx)
    minimal = is_minimal(cx)
    quotient = check_quotient_relation(I)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "schema": 1,
                    "stable": True,
                    "complex": square.ok,
                    "minimal": minimal,
                    "quotient_relation": quotient.ok,
                },
                indent=2,
            )
        )
    else:
        print("stable: yes")
        print(f"complex: {'ok' if square.ok else 'FAIL'}")
        print(f"minimal: {'yes' if minimal else 'NO'}")
        print(f"quotient_relation: {'ok' if quotient.ok else 'FAIL'}")
    return 0 if (square.ok and minimal and quotient.ok) else 1


def cmd_invariants(args) -> int:
    I, _cm = _load(args)
    require_stable(I)
    pd = projective_dimension(I)
    betti = [betti_formula(I, q) for q in range(pd + 1)]
    enum = [betti_from_resolution(I, q) for q in range(pd + 1)]
    if betti != enum:
        print("error: formula and resolution Betti numbers disagree", file=sys.stderr)
        return 1
    graded = graded_betti(I)
    series = poincare_series(I)
    max_degree = args.max_degree if args.max_degree is not None else I.max_gen_degree() + 5
    expansion = series.expand(max_degree)
    if args.format == "json":
        out = {
            "schema": 1,
            "n": I.n,
            "generators": [list(g) for g in I.generators],
            "projective_dimension": pd,
            "tor_regularity": tor_regularity(I),
            "cm_regularity": cm_regularity(I),
            "betti": betti,
            "graded_betti": {f"{i},{j}": v for (i, j), v in sorted(graded.items())},
            "poincare": {
                "summands": [list(s) for s in series.summands],
                "numerator": list(series.numerator),
                "expansion": expansion,
            },
        }
        print(json.dumps(out, indent=2))
        return 0
    print(f"projective_dimension: {pd}")
    print(f"tor_regularity: {tor_regularity(I)}")
    print(f"cm_regularity: {cm_regularity(I)}")
    print("betti: " + " ".join(str(b) for b in betti))
    print(
        "graded_betti: "
        + "  ".join(f"({i},{j})={v}" for (i, j), v in sorted(graded.items()))
    )
    print("poincare_numerator: " + " ".join(str(c) for c in series.numerator))
    print(f"poincare_expansion[0..{max_degree}]: " + " ".join(str(c) for c in expansion))
    return 0


def cmd_dg_table(args) -> int:
    I, cm = _load(args)
    phi = _specialization(args, I, cm)
    require_stable(I)
    table = multiplication_table(I)
    syms = table.symbols
    if args.format == "json":
        entries = []
        for (i, j), e in sorted(table.entries.items()):
            amb = e.ambient
            red = e.reduced
            rec = {
                "left": symbol_to_json(e.left),
                "right": symbol_to_json(e.right),
                "ambient": None if amb is None else _term_json(phi, amb.coef, amb.mono, amb.sym),
                "in_resolution": None if red is None else _term_json(phi, red.coef, red.mono, red.sym),
            }
            entries.append(rec)
        print(json.dumps({"schema": 1, "symbols": [symbol_to_json(s) for s in syms], "entries": entries}, indent=2))
        return 0
    labels = [render_symbol(s) for s in syms]
    cells = []
    for i in range(len(syms)):
        row = []
        for j in range(len(syms)):
            e = table.entries[(i, j)]
            if e.ambient is None:
                row.append("0")
            elif phi is None:
                row.append(render_term(*e.ambient))
            else:
                row.append(f"{render_symbol(e.ambient.sym)}*{_coef_text(phi, e.ambient.coef, e.ambient.mono)}")
        cells.append(row)
    left_w = max(len(l) for l in labels + ["*"])
    widths = [max(len(labels[j]), max(len(cells[i][j]) for i in range(len(syms)))) for j in range(len(syms))]
    print("  ".join(["*".ljust(left_w)] + [labels[j].ljust(widths[j]) for j in range(len(syms))]))
    for i in range(len(syms)):
        print("  ".join([labels[i].ljust(left_w)] + [cells[i][j].ljust(widths[j]) for j in range(len(syms))]))
    return 0


def cmd_dg_verify(args) -> int:
    I, _cm = _load(args)
    require_stable(I)
    checks = {
        "leibniz": check_leibniz(I),
        "associativity": check_associativity(I),
        "color_commutativity": check_color_commutativity(I),
        "odd_squares": check_odd_squares(I, trials=args.trials, seed=args.seed),
        "augmentation": check_augmentation(I),
    }
    if args.format == "json":
        print(json.dumps({"schema": 1, **{k: v.ok for k, v in checks.items()}}, indent=2))
    else:
        for name, res in checks.items():
            print(f"{name}: {'ok' if res.ok else 'FAIL'}")
    return 0 if all(v.ok for v in checks.values()) else 1


def cmd_homology_check(args) -> int:
    I, cm = _load(args)
    require_stable(I)
    if args.mode == "numeric":
        phi = _specialization(args, I, cm)
    elif args.all_ones:
        phi = FieldSpecialization.all_ones(I.n)
    else:
        phi = FieldSpecialization.random_mod_p(I.n, args.prime, args.q_seed)
    bound = None
    if args.bound:
        bound = tuple(int(t) for t in args.bound.split(","))
    rep = check_exactness(I, phi, bound=bound)
    if args.format == "json":
        print(json.dumps(report_to_json(rep), indent=2))
    else:
        desc = f"{rep.field}" + (f" p={rep.prime}" if rep.prime else "")
        print(f"specialization: {desc}")
        print("bound: " + " ".join(str(b) for b in rep.bound))
        print(f"multidegrees: {rep.multidegrees_checked}")
        for a, msg in rep.violations:
            print(f"violation at {list(a)}: {msg}")
        print(f"ok: {'yes' if rep.ok else 'NO'}")
    return 0 if rep.ok else 1


def cmd_family(args) -> int:
    if args.kind == "power_of_m":
        I = power_of_maximal_ideal(args.n, args.d)
    elif args.kind == "s_n":
        I = s_n_ideal(args.n)
    elif args.kind == "random_stable":
        I = random_stable_ideal(args.n, seed=args.seed, gen_count=args.gen_count, deg_cap=args.deg_cap)
    else:
        raise SkewekError(f"unknown family {args.kind!r}")
    print(json.dumps(ideal_to_json(I), indent=2))
    return 0


def _add_io_flags(p, mode=True):
    p.add_argument("--input", help="ideal JSON file, or - for stdin")
    p.add_argument("--ideal", help="ideal JSON given inline")
    p.add_argument("--format", choices=("text", "json"), default="text")
    if mode:
        p.add_argument("--mode", choices=("symbolic", "numeric"), default="symbolic")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewek", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", help="build the resolution and print it")
    _add_io_flags(p)
    p.set_defaults(fn=cmd_resolve)

    p = sub.add_parser("verify", help="d.d=0, minimality, quotient relation")
    _add_io_flags(p, mode=False)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("invariants", help="Betti numbers, regularity, Poincare series")
    _add_io_flags(p, mode=False)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("dg-table", help="multiplication table of basis symbols")
    _add_io_flags(p)
    p.set_defaults(fn=cmd_dg_table)

    p = sub.add_parser("dg-verify", help="DG algebra axioms")
    _add_io_flags(p, mode=False)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_dg_verify)

    p = sub.add_parser("homology-check", help="exactness under a specialization")
    _add_io_flags(p)
    p.add_argument("--prime", type=int, default=1000003)
    p.add_argument("--q-seed", type=int, default=0)
    p.add_argument("--bound", help="comma-separated multidegree bound")
    p.add_argument("--all-ones", action="store_true", help="use q_ij = 1 over Q")
    p.set_defaults(fn=cmd_homology_check)

    p = sub.add_parser("family", help="emit a stock ideal as JSON")
    p.add_argument("--kind", required=True, choices=("power_of_m", "s_n", "random_stable"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gen-count", type=int, default=2)
    p.add_argument("--deg-cap", type=int, default=4)
    p.set_defaults(fn=cmd_family)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except NotStableError as e:
        print(f"error: {e}", file=sys.stderr)
        if e.witness is not None:
            u, i = e.witness
            print(f"witness: generator {render_monomial(u)}, index {i}", file=sys.stderr)
        return 2
    except SkewekError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
        print(f"error: bad input ({e})", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
