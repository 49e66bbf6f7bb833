"""Command-line front end: file ingestion, demos and figure export."""

from bregkern.cli.demos import DEMOS, DemoOptions, DemoResult, run_demo, synthetic_histograms
from bregkern.cli.io import ingest_histogram, ingest_points, parse_tag, pgm_histogram, read_pgm
from bregkern.cli.main import build_parser, main

__all__ = [
    "DEMOS",
    "DemoOptions",
    "DemoResult",
    "build_parser",
    "ingest_histogram",
    "ingest_points",
    "main",
    "parse_tag",
    "pgm_histogram",
    "read_pgm",
    "run_demo",
    "synthetic_histograms",
]
