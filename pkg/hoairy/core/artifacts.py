import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import hoairy
from hoairy.core.config import CSV_COMMENT_PREFIX, SCHEMA_VERSION, TOOL_NAME
from hoairy.core.run_config import RunConfig
from hoairy.utils.shortcuts import format_float, round_float


def tool_header() -> Dict[str, str]:
    return {"name": TOOL_NAME, "version": hoairy.__version__}


def rounded(value: Any) -> Any:
    """Recursively fix floats at 15 significant digits, leave the rest alone."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return round_float(value)
    if isinstance(value, dict):
        return {key: rounded(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [rounded(item) for item in value]
    if hasattr(value, "item"):
        return rounded(value.item())
    return value


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return format_float(value)
    if hasattr(value, "item"):
        return _cell(value.item())
    return str(value)


@dataclass
class Artifact:
    """
    Output of one command run. `passed` is False when a check the command
    ran did not hold; the artifact is still written and the run exits 1.
    """

    config: RunConfig
    result: Any = None
    columns: Sequence[str] = ()
    rows: List[Sequence[Any]] = field(default_factory=list)
    text: Optional[str] = None
    passed: bool = True

    def render(self) -> str:
        if self.text is not None and self.config.format in ("text", "latex"):
            return self.text
        if self.config.format == "csv" and self.columns:
            return CsvArtifactWriter.dumps(self)
        return JsonArtifactWriter.dumps(self)


class JsonArtifactWriter:
    @staticmethod
    def document(artifact: Artifact) -> Dict[str, Any]:
        result = artifact.result
        if result is None and artifact.columns:
            result = [dict(zip(artifact.columns, row)) for row in artifact.rows]
        return {
            "schema_version": SCHEMA_VERSION,
            "tool": tool_header(),
            "config": rounded(artifact.config.to_dict()),
            "result": rounded(result),
        }

    @classmethod
    def dumps(cls, artifact: Artifact) -> str:
        return json.dumps(cls.document(artifact), indent=2, sort_keys=True)


class CsvArtifactWriter:
    @staticmethod
    def header_lines(config: RunConfig) -> List[str]:
        tool = tool_header()
        return [
            f"{CSV_COMMENT_PREFIX}tool: {tool['name']} {tool['version']}",
            f"{CSV_COMMENT_PREFIX}schema_version: {SCHEMA_VERSION}",
            CSV_COMMENT_PREFIX
            + "config: "
            + json.dumps(rounded(config.to_dict()), sort_keys=True),
        ]

    @classmethod
    def dumps(cls, artifact: Artifact) -> str:
        buffer = io.StringIO()
        for line in cls.header_lines(artifact.config):
            buffer.write(line + "\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(artifact.columns)
        for row in artifact.rows:
            writer.writerow([_cell(value) for value in row])
        return buffer.getvalue().rstrip("\n")
