"""Possibility spaces: recursive descriptors for content and control values.

A space describes every valid value tree (integers at the leaves) and supports
sampling, validation, uniform mutation, uniform crossover, and a bijective
flat encoding. Leaf order everywhere is a fixed depth-first traversal: record
fields in declared order, array elements left to right, grid rows top to
bottom, grid layers in z-major order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


class SpaceError(ValueError):
    """A value does not fit a space; carries the offending leaf index when known."""

    def __init__(self, message: str, leaf: int | None = None):
        super().__init__(message)
        self.leaf = leaf


@dataclass(frozen=True)
class Space:
    """Base descriptor. Concrete spaces implement the traversal hooks below."""

    @property
    def leaf_count(self) -> int:
        raise NotImplementedError

    def sample(self, rng: random.Random):
        raise NotImplementedError

    def contains(self, value) -> bool:
        raise NotImplementedError

    def _flatten_into(self, value, out: list) -> None:
        raise NotImplementedError

    def _unflatten_from(self, vec, pos: int):
        """Consume leaves from vec starting at pos; return (value, new_pos)."""
        raise NotImplementedError

    def mutate(self, value, rate: float, rng: random.Random):
        raise NotImplementedError

    def mix(self, a, b, rng: random.Random):
        raise NotImplementedError


@dataclass(frozen=True)
class Discrete(Space):
    cardinality: int

    def __post_init__(self):
        if self.cardinality < 1:
            raise SpaceError(f"Discrete cardinality must be >= 1, got {self.cardinality}")

    @property
    def leaf_count(self) -> int:
        return 1

    def sample(self, rng):
        return rng.randrange(self.cardinality)

    def contains(self, value) -> bool:
        return isinstance(value, int) and not isinstance(value, bool) and 0 <= value < self.cardinality

    def _flatten_into(self, value, out):
        out.append(value)

    def _unflatten_from(self, vec, pos):
        v = vec[pos]
        if not self.contains(v):
            raise SpaceError(f"value {v!r} not in Discrete({self.cardinality}) at leaf {pos}", leaf=pos)
        return v, pos + 1

    def mutate(self, value, rate, rng):
        if rng.random() < rate:
            return rng.randrange(self.cardinality)
        return value

    def mix(self, a, b, rng):
        return a if rng.random() < 0.5 else b


@dataclass(frozen=True)
class Range(Space):
    lo: int
    hi: int  # inclusive

    def __post_init__(self):
        if self.lo > self.hi:
            raise SpaceError(f"Range lo must be <= hi, got ({self.lo}, {self.hi})")

    @property
    def leaf_count(self) -> int:
        return 1

    def sample(self, rng):
        return rng.randint(self.lo, self.hi)

    def contains(self, value) -> bool:
        return isinstance(value, int) and not isinstance(value, bool) and self.lo <= value <= self.hi

    def _flatten_into(self, value, out):
        out.append(value)

    def _unflatten_from(self, vec, pos):
        v = vec[pos]
        if not self.contains(v):
            raise SpaceError(f"value {v!r} not in Range({self.lo}, {self.hi}) at leaf {pos}", leaf=pos)
        return v, pos + 1

    def mutate(self, value, rate, rng):
        if rng.random() < rate:
            return rng.randint(self.lo, self.hi)
        return value

    def mix(self, a, b, rng):
        return a if rng.random() < 0.5 else b


@dataclass(frozen=True)
class Array(Space):
    element: Space
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise SpaceError(f"Array length must be >= 1, got {self.length}")

    @property
    def leaf_count(self) -> int:
        return self.element.leaf_count * self.length

    def sample(self, rng):
        return [self.element.sample(rng) for _ in range(self.length)]

    def contains(self, value) -> bool:
        return (
            isinstance(value, list)
            and len(value) == self.length
            and all(self.element.contains(v) for v in value)
        )

    def _flatten_into(self, value, out):
        for v in value:
            self.element._flatten_into(v, out)

    def _unflatten_from(self, vec, pos):
        items = []
        for _ in range(self.length):
            v, pos = self.element._unflatten_from(vec, pos)
            items.append(v)
        return items, pos

    def mutate(self, value, rate, rng):
        return [self.element.mutate(v, rate, rng) for v in value]

    def mix(self, a, b, rng):
        return [self.element.mix(x, y, rng) for x, y in zip(a, b)]


@dataclass(frozen=True)
class Grid2D(Space):
    element: Space
    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise SpaceError(f"Grid2D dimensions must be >= 1, got {self.width}x{self.height}")

    @property
    def leaf_count(self) -> int:
        return self.element.leaf_count * self.width * self.height

    def sample(self, rng):
        return [[self.element.sample(rng) for _ in range(self.width)] for _ in range(self.height)]

    def contains(self, value) -> bool:
        return (
            isinstance(value, list)
            and len(value) == self.height
            and all(
                isinstance(row, list)
                and len(row) == self.width
                and all(self.element.contains(v) for v in row)
                for row in value
            )
        )

    def _flatten_into(self, value, out):
        for row in value:
            for v in row:
                self.element._flatten_into(v, out)

    def _unflatten_from(self, vec, pos):
        rows = []
        for _ in range(self.height):
            row = []
            for _ in range(self.width):
                v, pos = self.element._unflatten_from(vec, pos)
                row.append(v)
            rows.append(row)
        return rows, pos

    def mutate(self, value, rate, rng):
        return [[self.element.mutate(v, rate, rng) for v in row] for row in value]

    def mix(self, a, b, rng):
        return [
            [self.element.mix(x, y, rng) for x, y in zip(ra, rb)]
            for ra, rb in zip(a, b)
        ]


@dataclass(frozen=True)
class Grid3D(Space):
    element: Space
    width: int
    height: int
    depth: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1 or self.depth < 1:
            raise SpaceError(
                f"Grid3D dimensions must be >= 1, got {self.width}x{self.height}x{self.depth}"
            )

    @property
    def leaf_count(self) -> int:
        return self.element.leaf_count * self.width * self.height * self.depth

    def _layer(self) -> Grid2D:
        return Grid2D(self.element, self.width, self.height)

    def sample(self, rng):
        return [self._layer().sample(rng) for _ in range(self.depth)]

    def contains(self, value) -> bool:
        layer = self._layer()
        return (
            isinstance(value, list)
            and len(value) == self.depth
            and all(layer.contains(v) for v in value)
        )

    def _flatten_into(self, value, out):
        layer = self._layer()
        for v in value:
            layer._flatten_into(v, out)

    def _unflatten_from(self, vec, pos):
        layer = self._layer()
        layers = []
        for _ in range(self.depth):
            v, pos = layer._unflatten_from(vec, pos)
            layers.append(v)
        return layers, pos

    def mutate(self, value, rate, rng):
        layer = self._layer()
        return [layer.mutate(v, rate, rng) for v in value]

    def mix(self, a, b, rng):
        layer = self._layer()
        return [layer.mix(x, y, rng) for x, y in zip(a, b)]


class Record(Space):
    """Ordered named fields, each a space. Values are dicts with exactly those keys."""

    def __init__(self, fields):
        if hasattr(fields, "items"):
            fields = tuple(fields.items())
        else:
            fields = tuple(fields)
        if not fields:
            raise SpaceError("Record needs at least one field")
        self._fields = fields

    @property
    def fields(self) -> tuple:
        return self._fields

    @property
    def names(self) -> tuple:
        return tuple(name for name, _ in self._fields)

    def __eq__(self, other):
        return isinstance(other, Record) and self._fields == other._fields

    def __hash__(self):
        return hash(("Record", self._fields))

    def __repr__(self):
        inner = ", ".join(f"{name}={space!r}" for name, space in self._fields)
        return f"Record({inner})"

    @property
    def leaf_count(self) -> int:
        return sum(space.leaf_count for _, space in self._fields)

    def sample(self, rng):
        return {name: space.sample(rng) for name, space in self._fields}

    def contains(self, value) -> bool:
        if not isinstance(value, dict) or set(value.keys()) != set(self.names):
            return False
        return all(space.contains(value[name]) for name, space in self._fields)

    def _flatten_into(self, value, out):
        for name, space in self._fields:
            space._flatten_into(value[name], out)

    def _unflatten_from(self, vec, pos):
        result = {}
        for name, space in self._fields:
            v, pos = space._unflatten_from(vec, pos)
            result[name] = v
        return result, pos

    def mutate(self, value, rate, rng):
        return {name: space.mutate(value[name], rate, rng) for name, space in self._fields}

    def mix(self, a, b, rng):
        return {name: space.mix(a[name], b[name], rng) for name, space in self._fields}


def sample(space: Space, rng: random.Random):
    """Draw a uniform value from the space; every leaf independent and uniform."""
    return space.sample(rng)


def contains(space: Space, value) -> bool:
    return space.contains(value)


def flatten(space: Space, value) -> list[int]:
    """Depth-first leaf vector of the value. Raises SpaceError if the value does not fit."""
    if not space.contains(value):
        raise SpaceError(f"value does not fit space {space!r}")
    out: list[int] = []
    space._flatten_into(value, out)
    return out


def unflatten(space: Space, vec) -> object:
    """Inverse of flatten. Raises SpaceError naming the leaf on length or range errors."""
    n = space.leaf_count
    if len(vec) != n:
        raise SpaceError(f"expected {n} leaves, got {len(vec)}")
    value, pos = space._unflatten_from(list(vec), 0)
    return value


def mutate(space: Space, value, rate: float, rng: random.Random):
    """Resample each leaf independently with probability rate (uniform over its leaf space)."""
    if not 0.0 <= rate <= 1.0:
        raise SpaceError(f"mutation rate must be in [0, 1], got {rate}")
    return space.mutate(value, rate, rng)


def mix(space: Space, a, b, rng: random.Random):
    """Uniform crossover: each leaf taken from a or b with probability 0.5."""
    return space.mix(a, b, rng)


def key(space: Space, value) -> str:
    """Canonical comma-joined flat form, for hashing and serialization only."""
    return ",".join(str(v) for v in flatten(space, value))
