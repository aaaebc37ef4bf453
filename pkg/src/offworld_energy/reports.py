"""Render ledgers, ratio reports, claims and sweeps as table, csv or json.

csv and json carry energies in MJ in fixed scientific notation with six
significant digits so that identical runs give byte-identical files. json
additionally stores the exact joule values.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

from . import __version__
from .claims import PaperClaim
from .constants import MJ
from .ledger import EnergyLedger
from .scenario import RatioReport

FORMATS = ("table", "csv", "json")
LEDGER_HEADER = ("category", "energy_mj", "percent")


def sci(x: float) -> str:
    return f"{x:.5e}"


def _sci_num(x: float) -> float:
    return float(sci(x))


def _csv(rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        cells = [str(r[0]).ljust(widths[0])] + [str(c).rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells))
    return "\n".join(lines) + "\n"


def _ledger_rows(ledger: EnergyLedger, prefix: str = ""):
    pct = dict(ledger.percents())
    for k, v in ledger:
        yield prefix + k, v, pct[k]
    yield prefix + "total", ledger.total, 100.0 if ledger.total else 0.0


def render_ledgers(ledgers: Sequence[tuple[str, EnergyLedger]], fmt: str,
                   scenario: str, kind: str) -> str:
    """Render one or more named ledgers.

    With several ledgers, csv/table categories are prefixed ``<ledger>.``;
    percentages are relative to each ledger's own total.
    """
    prefixed = len(ledgers) > 1
    if fmt == "json":
        return _json({
            "scenario": scenario,
            "kind": kind,
            "engine_version": __version__,
            "ledgers": [{
                "name": name,
                "items": [{"category": k, "energy_mj": _sci_num(v / MJ), "energy_j": v,
                           "percent": _sci_num(p)}
                          for (k, v), (_, p) in zip(ledger.items, ledger.percents())],
                "total_mj": _sci_num(ledger.total / MJ),
                "total_j": ledger.total,
            } for name, ledger in ledgers],
        })
    rows = []
    for name, ledger in ledgers:
        rows += list(_ledger_rows(ledger, f"{name}." if prefixed else ""))
    if fmt == "csv":
        return _csv([LEDGER_HEADER, *[(k, sci(v / MJ), sci(p)) for k, v, p in rows]])
    title = f"# {kind}: {scenario}\n"
    return title + _table(("category", "energy [MJ]", "percent"),
                          [(k, f"{v / MJ:,.2f}", f"{p:.2f}") for k, v, p in rows])


def parse_ledger_csv(text: str) -> list[tuple[str, float, float]]:
    """Inverse of the csv ledger rendering: ``(category, MJ, percent)`` rows."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != LEDGER_HEADER:
        raise ValueError(f"unexpected csv header {header}")
    return [(k, float(mj), float(p)) for k, mj, p in reader]


def ledger_from_json(text: str) -> dict[str, EnergyLedger]:
    """Rebuild the exact ledgers from a json report."""
    doc = json.loads(text)
    return {l["name"]: EnergyLedger(tuple((i["category"], i["energy_j"]) for i in l["items"]))
            for l in doc["ledgers"]}


def _fmt_ratio(r: float | None) -> str:
    return "undefined" if r is None else sci(r)


def render_ratio_reports(reports: Sequence[tuple[str, RatioReport]], fmt: str) -> str:
    if fmt == "json":
        return _json({
            "engine_version": __version__,
            "comparisons": [{
                "kind": kind, "a": rep.a_name, "b": rep.b_name,
                "rows": [{"category": r.category, "a_mj": _sci_num(r.a / MJ),
                          "b_mj": _sci_num(r.b / MJ),
                          "ratio": None if r.ratio is None else _sci_num(r.ratio)}
                         for r in (*rep.rows, rep.total)],
            } for kind, rep in reports],
        })
    rows = []
    for kind, rep in reports:
        for r in (*rep.rows, rep.total):
            rows.append((f"{kind}.{r.category}", r.a / MJ, r.b / MJ, r.ratio))
    if fmt == "csv":
        return _csv([("category", "a_mj", "b_mj", "ratio"),
                     *[(k, sci(a), sci(b), _fmt_ratio(r)) for k, a, b, r in rows]])
    a, b = reports[0][1].a_name, reports[0][1].b_name
    return f"# compare: {a} / {b}\n" + _table(
        ("category", "a [MJ]", "b [MJ]", "a/b"),
        [(k, f"{x:,.2f}", f"{y:,.2f}", "undefined" if r is None else f"{r:.4g}")
         for k, x, y, r in rows])


def render_claims(claims: Sequence[PaperClaim], fmt: str) -> str:
    header = ("id", "claimed", "computed", "units", "tolerance", "status")
    if fmt == "json":
        return _json({
            "engine_version": __version__,
            "claims": [{"id": c.id, "description": c.description,
                        "claimed_value": c.claimed_value, "computed_value": _sci_num(c.computed),
                        "units": c.units, "computed_path": c.computed_path,
                        "tolerance": _sci_num(c.tolerance), "status": c.status}
                       for c in claims],
        })
    rows = [(c.id, sci(c.claimed_value), sci(c.computed), c.units, sci(c.tolerance), c.status)
            for c in claims]
    if fmt == "csv":
        return _csv([header, *rows])
    n_match = sum(c.status == "MATCH" for c in claims)
    return (_table(header, [(c.id, f"{c.claimed_value:.4g}", f"{c.computed:.4g}", c.units,
                             f"{c.tolerance:.3g}", c.status) for c in claims])
            + f"\n{n_match}/{len(claims)} claims match\n")


def render_sweep(path: str, rows: Sequence[tuple[float, EnergyLedger]], fmt: str,
                 scenario: str) -> str:
    if fmt == "json":
        return _json({
            "scenario": scenario, "parameter": path, "engine_version": __version__,
            "rows": [{"value": _sci_num(v),
                      "items": [{"category": k, "energy_mj": _sci_num(e / MJ), "energy_j": e,
                                 "percent": _sci_num(p)}
                                for (k, e), (_, p) in zip(l.items, l.percents())],
                      "total_mj": _sci_num(l.total / MJ), "total_j": l.total}
                     for v, l in rows],
        })
    flat = [(v, k, e, p) for v, l in rows for k, e, p in _ledger_rows(l)]
    if fmt == "csv":
        return _csv([("value", *LEDGER_HEADER),
                     *[(sci(v), k, sci(e / MJ), sci(p)) for v, k, e, p in flat]])
    return f"# sweep {path}: {scenario}\n" + _table(
        ("value", "category", "energy [MJ]", "percent"),
        [(f"{v:.6g}", k, f"{e / MJ:,.2f}", f"{p:.2f}") for v, k, e, p in flat])
