"""Content and report documents: JSON files exchanged with the CLI and harness."""

from __future__ import annotations

import json

from gengym import spaces
from gengym.problem import Problem
from gengym.reports import BenchmarkReport


def batch_to_dict(problem_name: str, values: list) -> dict:
    return {"problem": problem_name, "values": values}


def dump_batch(path, problem_name: str, values: list) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(batch_to_dict(problem_name, values), fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_batch(path, problem: Problem, space: spaces.Space) -> list:
    """Read a {"problem": ..., "values": [...]} document and validate every value."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or "values" not in doc:
        raise ValueError(f"{path}: expected a document with a 'values' list")
    if doc.get("problem") not in (None, problem.name):
        raise ValueError(
            f"{path}: document is for problem {doc.get('problem')!r}, expected {problem.name!r}"
        )
    values = doc["values"]
    if not isinstance(values, list):
        raise ValueError(f"{path}: 'values' must be a list")
    return values


def report_to_json(report: BenchmarkReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2)
