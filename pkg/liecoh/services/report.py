"""
Rendering of command results as text, JSON, CSV or LaTeX.

All four formats are produced from the same schema objects, so they carry
the same numbers.
"""
import csv
import io
import json
from functools import singledispatch
from typing import Any, List, Literal, NamedTuple

from jinja2 import Environment, PackageLoader, StrictUndefined

from liecoh.schemas.results import (
    BettiTableOut,
    CatalogEntryOut,
    CohomologyOut,
    DecompositionOut,
    LesReportOut,
    MultiplicityOut,
    OutputRecord,
    PredictionReportOut,
    TableReportOut,
    ValidationOut,
)

Format = Literal["text", "json", "csv", "latex"]
FORMATS = ("text", "json", "csv", "latex")


class Tabular(NamedTuple):
    headers: List[str]
    rows: List[List[Any]]
    math_columns: frozenset = frozenset()
    caption: str = ""


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)


# ============================================
# Result -> rows
# ============================================

@singledispatch
def tabulate(result: Any) -> Tabular:
    raise TypeError(f"no tabular form for {type(result).__name__}")


@tabulate.register
def _(result: BettiTableOut) -> Tabular:
    rows = [[r.degree, r.cochain_dim, r.rank, r.h] for r in result.rows]
    return Tabular(["k", "dim C^k", "rank d_k", "dim H^k"], rows, caption=f"H^*({result.algebra}, {result.module})")


@tabulate.register
def _(result: CohomologyOut) -> Tabular:
    return tabulate(result.table)


@tabulate.register
def _(result: LesReportOut) -> Tabular:
    rows = [[r.degree, r.radical, r.algebra, r.quotient] for r in result.rows]
    return Tabular(["k", "H^k(V,V)^s", "H^k(V,g)^s", "H^k(V,g/V)^s"], rows, caption=f"sl2⋉V_{result.m}")


@tabulate.register
def _(result: DecompositionOut) -> Tabular:
    rows = [[s.highest_weight, s.multiplicity] for s in result.summands]
    return Tabular(["highest weight", "multiplicity"], rows, caption=result.query)


@tabulate.register
def _(result: MultiplicityOut) -> Tabular:
    if result.values is not None:
        return Tabular(["i", result.kind], [[i, v] for i, v in enumerate(result.values)])
    return Tabular(["kind", "arguments", "value"], [[result.kind, result.arguments, result.value]])


@tabulate.register
def _(result: TableReportOut) -> Tabular:
    rows = []
    for r in result.rows:
        h = r.computed if r.computed is not None else [None, None, None]
        rows.append([r.name, r.dim, r.turkowski, h[0], h[1], h[2], r.expected, r.status])
    return Tabular(
        ["g", "dim", "Turkowski", "h0", "h1", "h2", "expected", "status"],
        rows,
        math_columns=frozenset({0, 2}),
        caption="Adjoint cohomology of perfect Lie algebras of dimension at most 9",
    )


@tabulate.register
def _(result: PredictionReportOut) -> Tabular:
    rows = [[c.quantity, c.predicted, c.computed, c.ok] for c in result.checks]
    return Tabular(["quantity", "predicted", "computed", "ok"], rows, caption=f"sl2⋉V_{result.m}")


@tabulate.register
def _(result: ValidationOut) -> Tabular:
    return Tabular(["field", "value"], [[k, v] for k, v in result.model_dump().items()])


@tabulate.register(list)
def _(result: list) -> Tabular:
    if result and not all(isinstance(e, CatalogEntryOut) for e in result):
        raise TypeError("only catalog listings are rendered from lists")
    rows = [[e.label, e.name, e.turkowski, e.dim, e.expected, "external" if e.external else ""] for e in result]
    return Tabular(["label", "g", "Turkowski", "dim", "expected", "data"], rows, math_columns=frozenset({1, 2}))


# ============================================
# Formats
# ============================================

LATEX_SYMBOLS = [
    ("sl2", r"\mathfrak{sl}_2"),
    ("⋉", r"\ltimes "),
    ("⊕", r"\oplus "),
    ("⊗", r"\otimes "),
    ("≅", r"\cong "),
    ("ε", r"\varepsilon"),
    ("φ", r"\phi"),
    ("ψ", r"\psi"),
    ("Λ", r"\Lambda"),
    ("n_", r"\mathfrak{n}_"),
    ("f_", r"\mathfrak{f}_"),
    ("A_", r"\mathcal{A}_"),
]


def latex_math(text: str) -> str:
    text = text.replace("+", "⊕")
    for symbol, command in LATEX_SYMBOLS:
        text = text.replace(symbol, command)
    return f"${text.strip()}$"


def latex_text(text: str) -> str:
    for ch, rep in (("\\", r"\textbackslash{}"), ("_", r"\_"), ("&", r"\&"), ("%", r"\%"), ("#", r"\#"),
                    ("^", r"\^{}"), ("{", r"\{"), ("}", r"\}")):
        text = text.replace(ch, rep)
    return text


_env = Environment(
    loader=PackageLoader("liecoh", "templates"),
    block_start_string="((*",
    block_end_string="*))",
    variable_start_string="((( ",
    variable_end_string=" )))",
    comment_start_string="((=",
    comment_end_string="=))",
    trim_blocks=True,
    lstrip_blocks=True,
    undefined=StrictUndefined,
    autoescape=False,
)


def to_latex(table: Tabular) -> str:
    cells = [
        [latex_math(_cell(v)) if i in table.math_columns else latex_text(_cell(v)) for i, v in enumerate(row)]
        for row in table.rows
    ]
    headers = [latex_text(h) for h in table.headers]
    return _env.get_template("tabular.tex.j2").render(
        headers=headers, rows=cells, caption=latex_text(table.caption), columns="l" + "c" * (len(headers) - 1)
    )


def to_csv(table: Tabular) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.headers)
    for row in table.rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def to_text(result: Any) -> str:
    if isinstance(result, DecompositionOut):
        return result.decomposition + "\n"
    if isinstance(result, MultiplicityOut):
        return (_cell(result.values) if result.values is not None else _cell(result.value)) + "\n"
    table = tabulate(result)
    grid = [table.headers] + [[_cell(v) for v in row] for row in table.rows]
    widths = [max(len(r[i]) for r in grid) for i in range(len(table.headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in grid]
    if table.caption:
        lines.insert(0, table.caption)
    return "\n".join(lines) + "\n"


def to_json(record: OutputRecord) -> str:
    payload = record.model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def render(record: OutputRecord, fmt: Format = "text") -> str:
    if fmt == "json":
        return to_json(record)
    if fmt == "csv":
        return to_csv(tabulate(record.result))
    if fmt == "latex":
        return to_latex(tabulate(record.result))
    if fmt == "text":
        return to_text(record.result)
    raise ValueError(f"unknown format {fmt!r}")

