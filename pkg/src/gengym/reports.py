"""Per-artifact and batch-level score reports."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ArtifactReport:
    """Scores for one artifact: quality/diversity/controllability in [0,1] plus its info record.

    quality == 1 marks the artifact feasible, diversity == 1 unique with
    respect to the evaluated batch, controllability == 1 controlled.
    """

    quality: float
    diversity: float
    controllability: float
    info: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "quality": self.quality,
            "diversity": self.diversity,
            "controllability": self.controllability,
            "info": self.info,
        }


@dataclass
class BenchmarkReport:
    """Batch result: percentage of feasible/unique/controlled artifacts plus per-artifact reports."""

    r_quality: float
    r_diversity: float
    r_controllability: float
    artifacts: list[ArtifactReport]

    def to_dict(self) -> dict:
        return {
            "r_quality": self.r_quality,
            "r_diversity": self.r_diversity,
            "r_controllability": self.r_controllability,
            "artifacts": [a.to_dict() for a in self.artifacts],
        }

    @classmethod
    def from_artifacts(cls, artifacts: list[ArtifactReport]) -> "BenchmarkReport":
        n = len(artifacts)
        return cls(
            r_quality=100.0 * sum(1 for a in artifacts if a.quality == 1.0) / n,
            r_diversity=100.0 * sum(1 for a in artifacts if a.diversity == 1.0) / n,
            r_controllability=100.0 * sum(1 for a in artifacts if a.controllability == 1.0) / n,
            artifacts=artifacts,
        )
