"""Render persisted search records as tables and figures.

Reporting never recomputes anything: every cell comes from a record on disk.
Markdown/CSV grids are written alongside PNG figures rendered with the Agg
backend, so the command works headless.
"""

from __future__ import annotations

import enum
import os
from collections import defaultdict

from .records import BoundsRecord, Record, SearchRecord, load_records, records_to_csv


class OutputFormat(enum.Enum):
    MARKDOWN = "md"
    CSV = "csv"
    GRAPH6 = "graph6"
    JSON_LINES = "jsonl"


def collect_records(results_dir: str) -> list[Record]:
    out: list[Record] = []
    for name in sorted(os.listdir(results_dir)):
        if name.endswith(".jsonl") and not name.startswith("classify-"):
            out.extend(load_records(os.path.join(results_dir, name)))
    return out


def _latest_by_params(records, kind):
    picked = {}
    for rec in records:
        if rec.kind == kind:
            picked[tuple(sorted(rec.params.items()))] = rec
    return list(picked.values())


def _mu_cell(rec: SearchRecord) -> str:
    if rec.value is None:
        cap = rec.params.get("cap")
        return f">={cap + 1}" if cap is not None else "?"
    return f"{rec.value} ({rec.witness_count})"


def mu_grid(records) -> tuple[list[int], list[int], dict]:
    recs = _latest_by_params(records, "mu")
    cells = {(r.params["a"], r.params["b"]): r for r in recs}
    if not cells:
        return [], [], {}
    a_vals = sorted({a for a, _ in cells})
    b_vals = sorted({b for _, b in cells})
    return a_vals, b_vals, cells


def render_mu_markdown(records) -> str:
    a_vals, b_vals, cells = mu_grid(records)
    if not cells:
        return "no smallest-order records\n"
    lines = ["| a\\b | " + " | ".join(str(b) for b in b_vals) + " |",
             "|" + "---|" * (len(b_vals) + 1)]
    for a in a_vals:
        row = [str(a)]
        for b in b_vals:
            if b < a:
                row.append("-")
            else:
                rec = cells.get((a, b))
                row.append(_mu_cell(rec) if rec else "")
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def render_mu_csv(records) -> str:
    a_vals, b_vals, cells = mu_grid(records)
    lines = ["a/b," + ",".join(str(b) for b in b_vals)]
    for a in a_vals:
        row = [str(a)]
        for b in b_vals:
            if b < a:
                row.append("-")
            else:
                rec = cells.get((a, b))
                row.append(_mu_cell(rec) if rec else "")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def render_bounds_markdown(records, kind: str) -> str:
    recs = _latest_by_params(records, kind)
    if not recs:
        return f"no {kind} records\n"
    recs.sort(key=lambda r: tuple(sorted(r.params.items())))
    header = "| params | lower | upper | exact | value | witnesses |"
    lines = [header, "|---|---|---|---|---|---|"]
    for r in recs:
        p = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        lines.append(f"| {p} | {r.lower} | {r.upper} | {'yes' if r.exact else 'no'} "
                     f"| {r.value} | {r.witness_count or 0} |")
    return "\n".join(lines) + "\n"


def render_search_markdown(records, kind: str) -> str:
    recs = _latest_by_params(records, kind)
    if not recs:
        return f"no {kind} records\n"
    recs.sort(key=lambda r: tuple(sorted(r.params.items())))
    lines = ["| params | value | status | witnesses |", "|---|---|---|---|"]
    for r in recs:
        p = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        lines.append(f"| {p} | {r.value} | {r.status} | {r.witness_count or 0} |")
    return "\n".join(lines) + "\n"


# -- figures -----------------------------------------------------------------------


def save_mu_figure(records, path: str) -> bool:
    a_vals, b_vals, cells = mu_grid(records)
    if not cells:
        return False
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(1.2 + 0.9 * len(b_vals), 1.2 + 0.7 * len(a_vals)))
    grid = [[float("nan")] * len(b_vals) for _ in a_vals]
    for i, a in enumerate(a_vals):
        for j, b in enumerate(b_vals):
            rec = cells.get((a, b))
            if rec is not None and rec.value is not None:
                grid[i][j] = rec.value
    im = ax.imshow(grid, cmap="viridis", aspect="auto")
    for i, a in enumerate(a_vals):
        for j, b in enumerate(b_vals):
            if b < a:
                ax.text(j, i, "-", ha="center", va="center", color="gray")
                continue
            rec = cells.get((a, b))
            if rec is not None:
                ax.text(j, i, _mu_cell(rec), ha="center", va="center",
                        color="white", fontsize=8)
    ax.set_xticks(range(len(b_vals)), [str(b) for b in b_vals])
    ax.set_yticks(range(len(a_vals)), [str(a) for a in a_vals])
    ax.set_xlabel("gp-number b")
    ax.set_ylabel("mp-number a")
    ax.set_title("smallest order with mp = a, gp = b (witness count)")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return True


def save_bounds_figure(records, kind: str, path: str) -> bool:
    recs = _latest_by_params(records, kind)
    if not recs:
        return False
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    series: dict[int, list] = defaultdict(list)
    for r in recs:
        series[r.params["a"]].append(r)
    fig, ax = plt.subplots(figsize=(6, 4))
    for a, rs in sorted(series.items()):
        rs.sort(key=lambda r: r.params["n"])
        ns = [r.params["n"] for r in rs]
        lows = [r.lower for r in rs]
        ups = [r.upper for r in rs]
        ax.plot(ns, lows, marker="o", label=f"a={a} lower")
        if any(u is not None for u in ups):
            ax.plot(ns, ups, marker="x", linestyle="--", label=f"a={a} upper")
    ax.set_xlabel("order n")
    ax.set_ylabel("size")
    ax.set_title(f"{kind}: extremal size bounds")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return True


def write_report(results_dir: str, out_dir: str, fmt: str = "md",
                 figures: bool = True) -> list[str]:
    """Render all records under results_dir; return the files written."""
    records = collect_records(results_dir)
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []

    def emit(name: str, text: str):
        path = os.path.join(out_dir, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        written.append(path)

    kinds = {r.kind for r in records}
    if fmt == "csv":
        if "mu" in kinds:
            emit("mu_grid.csv", render_mu_csv(records))
        emit("records.csv", records_to_csv(records))
    else:
        if "mu" in kinds:
            emit("mu_grid.md", render_mu_markdown(records))
        for kind in sorted(kinds & {"mex", "gex", "exminus"}):
            emit(f"{kind}.md", render_bounds_markdown(records, kind))
        for kind in sorted(kinds & {"diam", "diam2", "circulant"}):
            emit(f"{kind}.md", render_search_markdown(records, kind))
    if figures:
        fig_path = os.path.join(out_dir, "mu_grid.png")
        if save_mu_figure(records, fig_path):
            written.append(fig_path)
        for kind in sorted(kinds & {"mex", "gex"}):
            fig_path = os.path.join(out_dir, f"{kind}_bounds.png")
            if save_bounds_figure(records, kind, fig_path):
                written.append(fig_path)
    return written
