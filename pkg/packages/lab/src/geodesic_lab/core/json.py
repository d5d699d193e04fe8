import json
import math
from pathlib import Path
from typing import Any

from .fs import atomic_write_text


def json_safe(obj: Any) -> Any:
    """
    Replace non-finite floats by the string "inf"/"-inf"/"nan" so reports stay
    strict JSON.
    """
    if isinstance(obj, float) and not math.isfinite(obj):
        if math.isnan(obj):
            return "nan"
        return "inf" if obj > 0 else "-inf"
    if isinstance(obj, dict):
        return {str(k): json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_safe(v) for v in obj]
    return obj


def atomic_write_json(path: Path, obj: Any, *, indent: int | None = 2) -> None:
    atomic_write_text(path, stable_json_dumps(json_safe(obj), indent=indent) + "\n")


def read_json(path: Path) -> dict[str, Any]:
    with Path(path).open("r", encoding="utf-8") as f:
        return json.load(f)


def stable_json_dumps(obj: Any, *, indent: int | None = 2) -> str:
    """
    Deterministic JSON:
      - sort_keys=True
      - allow_nan=False (callers pass json_safe output)
      - stable separators when indent is None
    """
    if indent is None:
        return json.dumps(
            obj,
            sort_keys=True,
            ensure_ascii=False,
            allow_nan=False,
            separators=(",", ":"),
        )
    return json.dumps(
        obj, sort_keys=True, ensure_ascii=False, allow_nan=False, indent=indent
    )
