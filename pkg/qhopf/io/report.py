"""Spectral reports and their CSV, JSON and LaTeX renderings.

Reports hold exact canonical text; numeric columns are derived when a report
is rendered in numeric mode.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import pandas as pd

from ..bundles import Eigenpair, spectrum_rows
from ..coefficients import ScalarQ
from ..errors import PoleError
from .serialization import dumps

logger = logging.getLogger(__name__)

COLUMNS = ["n", "side", "monomial", "row", "eigenvalue", "table_value", "match"]


def _sample_label(q0: Fraction) -> str:
    return f"eigenvalue@q={q0}"


def _numeric(value: ScalarQ, q0: Fraction) -> Optional[str]:
    try:
        return repr(float(value.evaluate(q0)))
    except PoleError:
        return None


@dataclass
class SpectralReport:
    """Computed eigenvalues next to their table values.

    Attributes:
        records: one dict per eigenpair, keyed by ``COLUMNS``; eigenvalues
            kept exact.
        q_samples: numeric samples rendered in numeric mode.
    """

    records: List[Dict[str, object]] = field(default_factory=list)
    q_samples: List[Fraction] = field(default_factory=list)

    @classmethod
    def from_pairs(
        cls, pairs: Sequence[Eigenpair], q_samples: Sequence[Fraction] = ()
    ) -> "SpectralReport":
        return cls(records=spectrum_rows(list(pairs)), q_samples=list(q_samples))

    def extend(self, pairs: Sequence[Eigenpair]) -> None:
        self.records.extend(spectrum_rows(list(pairs)))

    @property
    def mismatches(self) -> List[Dict[str, object]]:
        return [r for r in self.records if not r["match"]]

    @property
    def all_match(self) -> bool:
        return not self.mismatches

    def _rows(self, numeric: bool) -> List[Dict[str, object]]:
        rows = []
        for record in self.records:
            row = dict(record)
            exact = row["eigenvalue"]
            row["eigenvalue"] = exact.to_text()
            row["table_value"] = row["table_value"].to_text()
            if numeric:
                for q0 in self.q_samples:
                    row[_sample_label(q0)] = _numeric(exact, q0)
            rows.append(row)
        return rows

    def columns(self, numeric: bool = False) -> List[str]:
        return COLUMNS + (
            [_sample_label(q0) for q0 in self.q_samples] if numeric else []
        )

    def to_frame(self, numeric: bool = False) -> pd.DataFrame:
        return pd.DataFrame(self._rows(numeric), columns=self.columns(numeric))

    def to_dict(self, numeric: bool = False) -> Dict[str, object]:
        return {
            "q_samples": [str(q0) for q0 in self.q_samples] if numeric else [],
            "records": self._rows(numeric),
            "all_match": self.all_match,
        }


def render_csv(report: SpectralReport, numeric: bool = False) -> str:
    return report.to_frame(numeric).to_csv(index=False)


def render_json(report: SpectralReport, numeric: bool = False) -> str:
    return dumps(report.to_dict(numeric))


def render_latex(report: SpectralReport, numeric: bool = False) -> str:
    """One table per side, rows in table-row order."""
    frame = report.to_frame(numeric)
    parts = []
    for side in ("left", "right"):
        part = frame[frame["side"] == side]
        if part.empty:
            continue
        part = part.sort_values(["row", "n", "monomial"], kind="mergesort")
        parts.append(
            part.to_latex(
                index=False,
                caption=f"Eigenvalues of the {side} bundle Laplacian",
                label=f"tab:{side}-spectrum",
            )
        )
    return "\n".join(parts)


RENDERERS = {"csv": render_csv, "json": render_json, "latex": render_latex}


def render(report: SpectralReport, output_format: str, numeric: bool = False) -> str:
    if output_format not in RENDERERS:
        raise ValueError(f"output format must be one of {sorted(RENDERERS)}")
    return RENDERERS[output_format](report, numeric)


def write_output(text: str, output_path: Optional[str]) -> None:
    """Writes to ``output_path``, or to stdout when it is None."""
    if output_path is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    with open(output_path, "w", newline="\n") as f:
        f.write(text)
    logger.info(f"wrote {output_path}")
