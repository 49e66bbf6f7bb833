"""Raster preview of a :class:`Scene` through matplotlib's Agg backend."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from bregkern.report.scene import Scene  # noqa: E402


def render_png(scene: Scene, path, dpi: int = 100) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 6), dpi=dpi)
    try:
        for e in scene.ellipses:
            xy = e.boundary()
            ax.fill(xy[:, 0], xy[:, 1], facecolor="none", edgecolor=e.style.color, alpha=e.style.opacity,
                    label=e.style.label)
        for line in scene.polylines:
            ax.plot(line.xy[:, 0], line.xy[:, 1], color=line.style.color, alpha=line.style.opacity,
                    label=line.style.label)
        for pt in scene.points:
            ax.plot(pt.xy[0], pt.xy[1], "o", ms=5, color=pt.style.color, alpha=pt.style.opacity,
                    label=pt.style.label)
        ax.set_xlabel(scene.axis_labels[0])
        ax.set_ylabel(scene.axis_labels[1])
        if scene.title:
            ax.set_title(scene.title)
        if any(d.style.label for d in (*scene.points, *scene.polylines, *scene.ellipses)):
            ax.legend(loc="best", fontsize="small")
        fig.tight_layout()
        # no Software/date chunks so reruns produce the same bytes
        fig.savefig(path, format="png", metadata={"Software": None})
    finally:
        plt.close(fig)
    return path
