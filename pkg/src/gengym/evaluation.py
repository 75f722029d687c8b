"""Batch evaluation: contents (and optional controls) in, benchmark report out."""

from __future__ import annotations

from gengym import spaces
from gengym.problem import Problem
from gengym.reports import ArtifactReport, BenchmarkReport


class BatchValidationError(ValueError):
    """An invalid content or control value; carries the batch index."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


def min_diversities(problem: Problem, infos: list[dict]) -> list[float]:
    """Set-level diversity per artifact: min pairwise diversity against the rest.

    An artifact is unique when it is sufficiently different from every other
    member; a singleton batch is vacuously unique (1.0).
    """
    n = len(infos)
    if n == 1:
        return [1.0]
    matrix = problem.diversity_pairs(infos)
    return [min(matrix[i][j] for j in range(n) if j != i) for i in range(n)]


def evaluate(problem: Problem, contents: list, controls: list | None = None) -> BenchmarkReport:
    """Score a batch of artifacts on quality, diversity, and controllability.

    Controls are optional; without them every controllability value (and the
    batch percentage) is 0. Info is computed exactly once per artifact and
    feeds all three evaluators.
    """
    if not contents:
        raise BatchValidationError("empty batch", index=0)
    for i, content in enumerate(contents):
        if not spaces.contains(problem.content_space, content):
            raise BatchValidationError(f"content at index {i} is not in the content space", index=i)
    if controls is not None:
        if len(controls) != len(contents):
            raise BatchValidationError(
                f"controls length {len(controls)} does not match contents length {len(contents)}",
                index=min(len(controls), len(contents)),
            )
        for i, control in enumerate(controls):
            if not spaces.contains(problem.control_space, control):
                raise BatchValidationError(f"control at index {i} is not in the control space", index=i)

    infos = [problem.info(content) for content in contents]
    diversities = min_diversities(problem, infos)
    artifacts = []
    for i, info in enumerate(infos):
        quality = problem.quality(info)
        controllability = problem.controllability(info, controls[i]) if controls is not None else 0.0
        artifacts.append(
            ArtifactReport(
                quality=quality,
                diversity=diversities[i],
                controllability=controllability,
                info=info,
            )
        )
    return BenchmarkReport.from_artifacts(artifacts)
