"""Figure rendering for report objects.

Each function takes the already-emitted report dict (the same JSON object
written to stdout) and renders a PNG next to the delimited output.  The
CLI only calls these when ``--figures DIR`` is passed, so matplotlib stays
an optional runtime cost.
"""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def _save(fig, directory, filename):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, filename)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def fingerprint_figure(rep: dict, directory: str) -> str:
    """Bar chart of layer ranks, torsion annotated on top of the bars."""
    layers = rep["layers"] if "layers" in rep else rep["fingerprint"]
    ranks = [layer["free_rank"] for layer in layers]
    ks = list(range(1, len(layers) + 1))
    fig, ax = plt.subplots(figsize=(5, 3))
    bars = ax.bar(ks, ranks, color="#41658a")
    for bar, layer in zip(bars, layers):
        if layer["torsion"]:
            label = "+" + ",".join("Z/%d" % d for d in layer["torsion"])
            ax.annotate(label, (bar.get_x() + bar.get_width() / 2, bar.get_height()),
                        ha="center", va="bottom", fontsize=8, color="#a63d40")
    ax.set_xlabel("layer k")
    ax.set_ylabel("free rank of layer k")
    ax.set_xticks(ks)
    name = rep.get("group", rep.get("presentation", "group"))
    ax.set_title("lower-central layers of %s" % name)
    return _save(fig, directory, "fingerprint-%s.png" % _slug(name))


def tower_figure(rep: dict, directory: str) -> str:
    """log_p of the quotient order against the tower level."""
    p = rep["prime"]
    levels = [entry["level"] for entry in rep["levels"]]
    logs = [round(math.log(entry["order"], p)) if entry["order"] > 1 else 0
            for entry in rep["levels"]]
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.plot(levels, logs, marker="o", color="#41658a")
    ax.set_xlabel("level k")
    ax.set_ylabel("log_%d |G / level-k term|" % p)
    ax.set_xticks(levels)
    ax.set_title("%d-quotient tower of %s" % (p, rep["group"]))
    ax.grid(alpha=0.3)
    return _save(fig, directory, "tower-%s-p%d.png" % (_slug(rep["group"]), p))


def verdict_summary_figure(reps: list, directory: str) -> str:
    """Scatter of the catalog: order against verdict."""
    fig, ax = plt.subplots(figsize=(6, 3))
    for verdict, color, row in (("nilpotent", "#41658a", 1), ("counterexample", "#a63d40", 0)):
        xs = [r["order"] for r in reps if r["verdict"] == verdict]
        ys = [row] * len(xs)
        ax.scatter(xs, ys, color=color, label=verdict, alpha=0.7)
    ax.set_yticks([0, 1])
    ax.set_yticklabels(["counterexample", "nilpotent"])
    ax.set_xlabel("group order")
    ax.set_xscale("log")
    ax.legend(loc="center right", fontsize=8)
    ax.set_title("nilpotency against subgroup embeddability (%d groups)" % len(reps))
    return _save(fig, directory, "theorem-c-summary.png")


def compare_figure(rep: dict, directory: str) -> str:
    """Side-by-side layer ranks of the two compared groups."""
    fig, ax = plt.subplots(figsize=(5, 3))
    ks = list(range(1, rep["class"] + 1))
    equal = rep["layers_equal"]
    ax.bar([k - 0.15 for k in ks], [1 if e else 0 for e in equal], width=0.3,
           color="#41658a", label="layer equal")
    ax.bar([k + 0.15 for k in ks], [0 if e else 1 for e in equal], width=0.3,
           color="#a63d40", label="layer differs")
    ax.set_xticks(ks)
    ax.set_xlabel("layer k")
    ax.set_yticks([])
    ax.legend(fontsize=8)
    ax.set_title("%s vs %s" % (rep["left"], rep["right"]))
    return _save(fig, directory, "compare-%s-%s.png" % (_slug(rep["left"]), _slug(rep["right"])))


def _slug(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in str(name))
