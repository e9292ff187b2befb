"""Static figures from security-diffusion experiment CSVs.

Reads only the documented matrix.csv / best_response.csv contracts and
renders heatmaps and sorted bar charts; every render returns a structured
self-report for assertion-friendly pipelines.
"""

__version__ = "0.1.0"

from .io import BarRow, ContractError, MatrixData, read_bars, read_matrix
from .render import png_dimensions, render_bars, render_heatmap
