"""Plain-text rendering of scalars, monomials, symbols, and matrices.

Conventions: q parameters print as q_i_j, collapsing to plain q when there
are only two variables; variables print as x, y, z for n <= 3 and as
x1..xn otherwise; a matrix entry like -q^2 * x prints as "-q^2*x".
"""

from __future__ import annotations

from .commutation import Scalar
from .monoid import Mono, is_unit
from .resolution import FreeComplex, Symbol

_SHORT = ("x", "y", "z")


def var_name(n: int, i: int) -> str:
    return _SHORT[i - 1] if n <= 3 else f"x{i}"


def render_monomial(m: Mono) -> str:
    if is_unit(m):
        return "1"
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 0:
            continue
        name = var_name(len(m), i)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def render_scalar(s: Scalar, n: int) -> str:
    parts = []
    for (i, j), e in s.q:
        base = "q" if n == 2 else f"q_{i}_{j}"
        parts.append(base if e == 1 else f"{base}^{e}")
    body = "*".join(parts) if parts else "1"
    return f"-{body}" if s.sign < 0 else body


def render_coefficient(s: Scalar, m: Mono) -> str:
    """Scalar times monomial, dropping redundant 1 factors."""
    sc = render_scalar(s, len(m))
    mo = render_monomial(m)
    if mo == "1":
        return sc
    if sc == "1":
        return mo
    if sc == "-1":
        return f"-{mo}"
    return f"{sc}*{mo}"


def render_symbol(sym: Symbol) -> str:
    return f"e({','.join(str(i) for i in sym.sigma)};{render_monomial(sym.gen)})"


def render_term(coef: Scalar, mono: Mono, sym: Symbol) -> str:
    tail = render_coefficient(coef, mono)
    return render_symbol(sym) if tail == "1" else f"{render_symbol(sym)}*{tail}"


def render_matrix(cx: FreeComplex, q: int) -> str:
    """The matrix of d_q as an aligned text block, one row per line."""
    rows, cols = len(cx.bases[q - 1]), len(cx.bases[q])
    mat = cx.matrices[q - 1]
    cells = [["0"] * cols for _ in range(rows)]
    for (i, j), entry in mat.items():
        cells[i][j] = " + ".join(render_coefficient(c, m) for c, m in entry)
    widths = [max(len(cells[r][c]) for r in range(rows)) for c in range(cols)]
    lines = []
    for r in range(rows):
        padded = "  ".join(cells[r][c].ljust(widths[c]) for c in range(cols))
        lines.append(f"[ {padded} ]")
    return "\n".join(lines)
