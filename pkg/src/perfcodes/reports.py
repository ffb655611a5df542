"""JSON reports emitted by the checks and the command line."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Any


@dataclass
class Report:
    code_id: str = ""
    sizes: dict[str, Any] = field(default_factory=dict)
    transitive: bool | None = None
    homogeneous: bool | None = None
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    failing_translators: list[str] = field(default_factory=list)
    method_notes: list[str] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, **kw)


def report_schema() -> dict[str, Any]:
    text = resources.files("perfcodes").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate_report(data: dict[str, Any]) -> None:
    import jsonschema

    jsonschema.validate(data, report_schema())
