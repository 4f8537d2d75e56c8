"""Figure rendering for table reports.

The only figure the report path produces is a per-prime comparison of the
first admissible characteristic under the two bounding methods.  Rendering
uses the Agg backend so it works headless; callers get back the written
path.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

__all__ = ["table_figure"]


def table_figure(rows, path: str) -> str:
    """Render first-prime-per-method bars for the given table rows.

    ``rows`` is the list produced by :func:`fourier_minors.bounds.reproduce_table`;
    the y-axis is logarithmic because the two methods diverge by orders of
    magnitude already at p = 11.
    """
    if not rows:
        raise ValueError("no table rows to plot")
    ps = [r.p for r in rows]
    xs = list(range(len(rows)))
    width = 0.38

    fig, ax = plt.subplots(figsize=(7.2, 4.2))
    bars_new = ax.bar(
        [x - width / 2 for x in xs],
        [r.q_new for r in rows],
        width,
        label="sharpened bound",
        color="#2a6fba",
    )
    bars_zhang = ax.bar(
        [x + width / 2 for x in xs],
        [r.q_zhang for r in rows],
        width,
        label="product bound",
        color="#c96a2b",
    )
    ax.set_yscale("log")
    ax.set_xticks(xs)
    ax.set_xticklabels([str(p) for p in ps])
    ax.set_xlabel("matrix order p")
    ax.set_ylabel("first admissible characteristic q")
    ax.set_title("First prime q with all minors of the order-p Fourier matrix nonzero")
    ax.legend()
    for bars in (bars_new, bars_zhang):
        ax.bar_label(bars, fontsize=8, padding=2)
    ax.margins(y=0.15)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
