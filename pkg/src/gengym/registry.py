"""Problem registry: named constructors with per-variant parameter overrides."""

from __future__ import annotations

from gengym.problem import Problem

_REGISTRY: dict[str, type] = {}

# Problems whose definitions depend on external game simulators or corpora;
# their names are reserved so typos fail loudly rather than silently.
_RESERVED: dict[str, str] = {
    "arcade-v0": "depends on an external arcade game simulator and gameplay agents",
    "loderunner-v0": "depends on an external game simulator and original-level corpus",
    "mario-v0": "depends on original-game level slices and an external A* gameplay agent",
    "talakat-v0": "depends on the external bullet-pattern game simulator",
}


def register(name: str, cls: type) -> None:
    if name in _REGISTRY or name in _RESERVED:
        raise ValueError(f"problem name already taken: {name}")
    _REGISTRY[name] = cls


def registered_names() -> list[str]:
    return sorted(_REGISTRY)


def reserved_names() -> list[str]:
    return sorted(_RESERVED)


def make(name: str, overrides: dict | None = None) -> Problem:
    """Build a registered problem with default variant parameters, applying overrides.

    Unknown names list the registry; unknown override keys list the problem's
    parameters; reserved names explain why they are unavailable.
    """
    if name in _RESERVED:
        raise KeyError(f"problem {name!r} is reserved, not implemented: {_RESERVED[name]}")
    if name not in _REGISTRY:
        raise KeyError(
            f"unknown problem {name!r}; registered problems: {', '.join(registered_names())}"
        )
    cls = _REGISTRY[name]
    overrides = dict(overrides or {})
    problem = cls()
    unknown = set(overrides) - set(problem.params)
    if unknown:
        raise KeyError(
            f"unknown variant parameters for {name!r}: {sorted(unknown)}; "
            f"available: {sorted(problem.params)}"
        )
    if overrides:
        problem = cls(**{**problem.params, **overrides})
    problem.name = name
    return problem
