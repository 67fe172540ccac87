# infra/datasets.py

import csv
from pathlib import Path
from typing import Dict, List, Optional, Union

GOLDEN_CASES_PATH = Path(__file__).resolve().parents[1] / "opalg" / "tests" / "golden" / "composition_cases.csv"


def load_golden_cases(path: Optional[Union[str, Path]] = None) -> List[Dict[str, str]]:
    """Load the golden composition cases from CSV, one dict per row."""
    source = Path(path) if path else GOLDEN_CASES_PATH
    if not source.exists():
        raise FileNotFoundError(f"Golden cases not found at {source}")

    rows: List[Dict[str, str]] = []
    with source.open("r", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        for row in reader:
            if (row.get("case_id") or "").startswith("#"):
                continue
            rows.append({k: (v or "").strip() for k, v in row.items()})
    return rows
