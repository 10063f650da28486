from .serialization import dumps, from_json, loads, parse_element, to_json
from .report import (
    COLUMNS,
    RENDERERS,
    SpectralReport,
    render,
    render_csv,
    render_json,
    render_latex,
    write_output,
)
