"""Benchmark engine for game content generators.

Problems live behind one contract (spaces, info, quality, diversity,
controllability, render); batches of artifacts are scored by the evaluation
engine; baseline search generators and an experiment harness sit on top.
"""

from gengym import spaces
from gengym.evaluation import evaluate
from gengym.registry import make, registered_names, reserved_names

__version__ = "0.1.0"

__all__ = ["spaces", "evaluate", "make", "registered_names", "reserved_names", "__version__"]
