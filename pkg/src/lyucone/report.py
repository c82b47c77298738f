"""Report serialization: aligned text, versioned JSON, and CSV.

JSON output carries ``schema_version`` 1 and sorted keys throughout, so a
given script always produces byte-identical bytes.  CSV rows are
``k,j,ample,lambda`` over every table in the report (dependence reports
contribute both of their tables).
"""

from __future__ import annotations

import json

from .lyubeznik import DependenceReport, LyubeznikTable, ParityReport
from .runner import RunReport

SCHEMA_VERSION = 1


def _table_obj(t: LyubeznikTable) -> dict:
    return {
        "space": t.space,
        "ample": t.ample,
        "dim": t.d,
        "k_range": list(t.krange),
        "j_range": list(t.jrange),
        "entries": [{"k": k, "j": j, "lambda": v}
                    for (k, j), v in sorted(t.entries.items())],
    }


def _dependence_obj(r: DependenceReport) -> dict:
    return {
        "space": r.space,
        "ample_a": r.ample_a,
        "ample_b": r.ample_b,
        "verdict": r.verdict,
        "entries": [{"k": k, "j": j, "lambda_a": va, "lambda_b": vb}
                    for (k, j, va, vb) in r.diff],
        "pure_converse_consistent": r.pure_converse_consistent,
    }


def _parity_obj(r: ParityReport) -> dict:
    return {
        "space": r.space,
        "k0": r.k0,
        "j0": r.j0,
        "ample_a": r.ample_a,
        "ample_b": r.ample_b,
        "mu_odd": dict(sorted(r.mu_odd.items())),
        "mu_even": dict(sorted(r.mu_even.items())),
        "delta_odd": r.delta_odd,
        "delta_even": r.delta_even,
        "genus": r.genus,
        "curve_degree": r.curve_degree,
        "delta2": r.delta2,
    }


def _emit_json(report: RunReport) -> bytes:
    obj = {
        "schema_version": SCHEMA_VERSION,
        "tables": [_table_obj(t) for t in report.tables],
        "diff": [_dependence_obj(r) for r in report.dependences],
        "parity": [_parity_obj(r) for r in report.parities],
        "metadata": report.metadata,
    }
    return (json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)
            + "\n").encode("utf-8")


def _emit_csv(report: RunReport) -> bytes:
    lines = ["k,j,ample,lambda"]
    for t in sorted(report.tables, key=lambda t: (t.space, t.ample)):
        for (k, j), v in sorted(t.entries.items()):
            lines.append(f"{k},{j},{t.ample},{v}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _text_table(t: LyubeznikTable) -> list[str]:
    ks = sorted({k for (k, _) in t.entries})
    js = list(range(t.jrange[0], t.jrange[1] + 1))
    head = [f"table {t.space}  ample={t.ample}  dim={t.d}"]
    cells = [["k\\j"] + [str(j) for j in js]]
    for k in ks:
        row = [str(k)]
        for j in js:
            v = t.value(k, j)
            row.append("n/a" if v is None else str(v))
        cells.append(row)
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    for row in cells:
        head.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return head


def _emit_text(report: RunReport) -> bytes:
    blocks: list[str] = []
    for t in report.tables:
        blocks.append("\n".join(_text_table(t)))
    for r in report.dependences:
        lines = [f"dependence {r.space}  {r.ample_a} vs {r.ample_b}: "
                 f"{'DEPENDS' if r.verdict else 'independent'}"]
        for (k, j, va, vb) in r.diff:
            lines.append(f"  (k={k}, j={j}): {r.ample_a} -> {va}, "
                         f"{r.ample_b} -> {vb}")
        blocks.append("\n".join(lines))
    for r in report.parities:
        blocks.append("\n".join([
            f"parity {r.space} at (k0={r.k0}, j0={r.j0})",
            f"  mu_odd:  {r.ample_a}={r.mu_odd[r.ample_a]}  "
            f"{r.ample_b}={r.mu_odd[r.ample_b]}",
            f"  mu_even: {r.ample_a}={r.mu_even[r.ample_a]}  "
            f"{r.ample_b}={r.mu_even[r.ample_b]}",
            f"  delta_odd={r.delta_odd}  delta_even={r.delta_even}"
            + (f"  genus={r.genus}" if r.genus is not None else ""),
        ]))
    return ("\n\n".join(blocks) + "\n").encode("utf-8")


def emit(report: RunReport, fmt: str = "text") -> bytes:
    """Serialize a run report as text, json, or csv."""
    if fmt == "json":
        return _emit_json(report)
    if fmt == "csv":
        return _emit_csv(report)
    if fmt == "text":
        return _emit_text(report)
    raise ValueError(f"unknown format {fmt!r}")
