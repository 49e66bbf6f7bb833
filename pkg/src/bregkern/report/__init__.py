from bregkern.report.png import render_png
from bregkern.report.scene import (
    TISSOT_SAMPLES,
    DrawnPoint,
    DrawnPolyline,
    Scene,
    Style,
    TissotEllipse,
    display_jacobian,
    display_metric,
    tissot_shape,
)
from bregkern.report.svg import HEIGHT, WIDTH, export_scene, render_svg
from bregkern.report.tables import format_number, read_csv, write_csv

__all__ = [
    "HEIGHT",
    "TISSOT_SAMPLES",
    "WIDTH",
    "DrawnPoint",
    "DrawnPolyline",
    "Scene",
    "Style",
    "TissotEllipse",
    "display_jacobian",
    "display_metric",
    "export_scene",
    "format_number",
    "read_csv",
    "render_png",
    "render_svg",
    "tissot_shape",
    "write_csv",
]
