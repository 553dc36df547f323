"""Figure rendering for exposure-lab CSV outputs."""

from .render import PlotSpec, SchemaError, render_scan, render_timeseries

__version__ = "0.1.0"
