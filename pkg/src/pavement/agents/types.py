"""Domain types passed between the pipeline agents."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np

from ..textutil import slugify


@dataclass(frozen=True)
class SceneSnapshot:
    """What the scene-assessment agent sees: a raster, a structured scene, or both.

    ``structured_scene`` mirrors the simulator world (ego pose, obstacles,
    lanes, goal, narrative) and stands in for pixels when running offline.
    """

    image: np.ndarray | None = None  # h x w x 3, uint8
    structured_scene: Mapping[str, Any] | None = None

    def __post_init__(self):
        if self.image is None and self.structured_scene is None:
            raise ValueError("snapshot needs an image or a structured scene")
        if self.image is not None:
            if self.image.ndim != 3 or self.image.shape[2] != 3:
                raise ValueError(f"image must be h x w x 3, got shape {self.image.shape}")
            if self.image.shape[0] < 1 or self.image.shape[1] < 1:
                raise ValueError("image must have positive dimensions")

    @property
    def scene_tag(self) -> str:
        """Stable routing tag derived from the scene narrative."""
        narrative = ""
        if self.structured_scene:
            narrative = str(self.structured_scene.get("narrative", ""))
        return slugify(narrative) if narrative else "untagged_scene"


@dataclass(frozen=True)
class Observation:
    """Scene assessment: criticality flag, explanation, description, audit trace."""

    is_critical: bool
    confidence: float
    issue_explanation: str
    scene_description: str
    reasoning_trace: str = ""

    def __post_init__(self):
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")
        if self.is_critical and not self.issue_explanation:
            raise ValueError("critical observations require a non-empty issue explanation")

    def to_json_dict(self) -> dict:
        return {
            "isCritical": self.is_critical,
            "confidence": self.confidence,
            "issueExplanation": self.issue_explanation,
            "sceneDescription": self.scene_description,
        }

    @classmethod
    def from_json_dict(cls, data: Mapping, reasoning_trace: str = "") -> "Observation":
        return cls(
            is_critical=bool(data["isCritical"]),
            confidence=float(data["confidence"]),
            issue_explanation=str(data["issueExplanation"]),
            scene_description=str(data["sceneDescription"]),
            reasoning_trace=reasoning_trace,
        )


@dataclass(frozen=True)
class SubGoal:
    index: int  # 1-based
    text: str

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("sub-goal indices are 1-based")
        if not self.text:
            raise ValueError("sub-goal text must be non-empty")


@dataclass(frozen=True)
class Plan:
    """Ordered recovery strategy; every sub-goal must succeed, in order."""

    goals: tuple[SubGoal, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.goals:
            raise ValueError("a plan must contain at least one sub-goal")
        indices = [g.index for g in self.goals]
        if indices != list(range(1, len(self.goals) + 1)):
            raise ValueError(f"sub-goal indices must be contiguous from 1, got {indices}")

    def __len__(self) -> int:
        return len(self.goals)

    def to_json_dict(self) -> dict:
        return {"goals": [{"index": g.index, "text": g.text} for g in self.goals]}

    @classmethod
    def from_texts(cls, texts: list[str]) -> "Plan":
        return cls(tuple(SubGoal(i + 1, t) for i, t in enumerate(texts)))

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Plan":
        goals = tuple(SubGoal(int(g["index"]), str(g["text"])) for g in data["goals"])
        return cls(goals)
