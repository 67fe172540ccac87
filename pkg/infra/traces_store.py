# infra/traces_store.py

import json
import uuid
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

TRACE_FILE = Path("data/opalg_runs.jsonl")


def _resolve(path: Optional[Union[str, Path]]) -> Path:
    return Path(path) if path else TRACE_FILE


def _jsonable(value: Any) -> Any:
    """
    Make one event value JSON serializable: objects with to_dict() are
    expanded, anything else unknown falls back to its string form.
    """
    if hasattr(value, "to_dict") and callable(value.to_dict):
        return value.to_dict()
    try:
        json.dumps(value)
        return value
    except (TypeError, ValueError):
        return str(value)


def log_trace(event: Dict[str, Any], path: Optional[Union[str, Path]] = None) -> str:
    """
    Append one run event (a `reduce` or `check-gs` invocation) as a JSON line.
    Adds trace_id + UTC timestamp. Returns trace_id.
    """
    trace_id = str(uuid.uuid4())
    record = {
        "trace_id": trace_id,
        "timestamp": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
        **{k: _jsonable(v) for k, v in event.items()},
    }

    target = _resolve(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("a", encoding="utf-8") as f:
        f.write(json.dumps(record, ensure_ascii=False) + "\n")
    return trace_id


def load_traces(path: Optional[Union[str, Path]] = None) -> List[Dict[str, Any]]:
    """
    Load all run events. A missing file yields [].
    """
    target = _resolve(path)
    if not target.exists():
        return []

    traces: List[Dict[str, Any]] = []
    with target.open("r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            try:
                traces.append(json.loads(line))
            except json.JSONDecodeError:
                # Corrupted line fallback
                traces.append({"_raw_line": line, "error": "failed_to_parse_json"})
    return traces
