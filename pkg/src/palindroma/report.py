"""Report rendering: CSV summaries with matplotlib figures written next to
them. Used by the centralizer census and the parametric family audit."""

from __future__ import annotations

import csv
import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from . import matrices  # noqa: E402
from .centralizer import OrderCensus  # noqa: E402
from .zclass import FamilyPairAudit  # noqa: E402


def write_census_report(census: OrderCensus, outdir: str) -> list[str]:
    """census.csv plus a bar chart of the order spectrum; returns the paths."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, "census.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["order", "count"])
        for k in sorted(census.counts):
            writer.writerow([k, census.counts[k]])
        writer.writerow(["infinite", census.infinite])

    labels = [str(k) for k in sorted(census.counts)] + ["inf"]
    values = [census.counts[k] for k in sorted(census.counts)] + [census.infinite]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar(labels, values, color="#4878a8")
    ax.set_xlabel("element order")
    ax.set_ylabel("count")
    ax.set_title(
        f"centralizer order spectrum (bound {census.bound})\n"
        f"base {matrices.format_matrix(census.base)}"
    , fontsize=9)
    fig.tight_layout()
    fig_path = os.path.join(outdir, "census.png")
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return [csv_path, fig_path]


def write_audit_report(audits: Sequence[FamilyPairAudit], outdir: str) -> list[str]:
    """audit.csv plus a commutant-rank figure over the parameter grid."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, "audit.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "n", "l", "m", "bound", "rank_a", "rank_b", "eigen_all_unit",
            "eigen_checked", "erratum_nonzero", "displayed_instance_failures",
            "hat_conjugators_found", "gl_conjugators_found",
        ])
        for a in audits:
            writer.writerow([
                a.n, a.l, a.m, a.bound, a.rank_a, a.rank_b, a.eigen_all_unit,
                a.eigen_checked, a.erratum_nonzero, a.displayed_instance_failures,
                a.hat_conjugators_found, a.gl_conjugators_found,
            ])

    labels = [f"({a.n},{a.l},{a.m})" for a in audits]
    xs = range(len(audits))
    fig, ax = plt.subplots(figsize=(max(5, 0.5 * len(audits)), 3.2))
    ax.plot(xs, [a.rank_a for a in audits], "o-", label="first family rank")
    ax.plot(xs, [a.rank_b for a in audits], "s-", label="second family rank")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=60, fontsize=7)
    ax.set_ylabel("commutant rank")
    ax.set_yticks([3, 5])
    ax.legend(fontsize=8)
    ax.set_title("commutant ranks across the parameter grid", fontsize=10)
    fig.tight_layout()
    fig_path = os.path.join(outdir, "audit_ranks.png")
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return [csv_path, fig_path]
