from dataclasses import dataclass

import pandas as pd

from jpm.helpers.csv_columns import timing_columns
from jpm.models.experiment import ExperimentConfig


@dataclass
class ExperimentResult:
    """Per-query rows and their per-(m, back-end) aggregates"""

    config: ExperimentConfig
    runs: pd.DataFrame
    cells: pd.DataFrame

    def backend_cells(self, backend: str | None = None) -> pd.DataFrame:
        cells = self.cells
        if backend is None:
            backend = cells["backend"].iloc[0]
        return cells[cells["backend"] == backend].sort_values("m").reset_index(drop=True)

    def to_csv(self, path_or_buf=None, *, timing: bool = True) -> str | None:
        frame = self.cells if timing else self.cells.drop(columns=timing_columns, errors="ignore")
        return frame.to_csv(path_or_buf, index=False, float_format="%.6f")
