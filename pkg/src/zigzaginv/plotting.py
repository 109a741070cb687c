"""Figure rendering for scan output.

Only the scan path produces a figure: the staircase of stretch factors
against the rotation parameter, one point per rational.  Rendering is
optional and file-based; the delimited output stays the primary artifact.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_scan_figure(rows, m: int, path: str) -> None:
    """Scatter lambda against q for one modality and write a PNG/PDF/SVG."""
    xs = [float(r.q) for r in rows]
    ys = [float(r.lam) for r in rows]
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.plot(xs, ys, linestyle="none", marker=".", markersize=3, color="black")
    ax.set_xlabel("rotation parameter q")
    ax.set_ylabel("stretch factor")
    ax.set_xlim(0, 1)
    ax.set_ylim(m, m + 1)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
