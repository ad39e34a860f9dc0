from abc import ABC, abstractmethod
from typing import Any, ClassVar

import numpy as np

from problem_graphs.problem_graph import ProblemGraph


class GraphGenerationError(RuntimeError):
    """Raised when a generator cannot produce a valid instance."""


def make_rng(seed: int) -> np.random.Generator:
    """Deterministic PCG64 stream for a 64-bit seed."""
    if seed < 0 or seed >= 2**64:
        raise ValueError(f"Seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


class GraphGenerator(ABC):
    """Abstract base class for seeded problem-graph families."""

    aliases: ClassVar[tuple[str, ...]] = ()
    presets: ClassVar[dict[str, dict[str, Any]]] = {}
    min_size: ClassVar[int] = 2

    def __init__(self, **params: Any):
        self._params = params
        self._validate_params()

    @property
    def params(self) -> dict[str, Any]:
        """Get a copy of the family parameters."""
        return dict(self._params)

    def _validate_params(self) -> None:
        """Validate family parameters; subclasses extend this."""
        if self._params:
            unknown = ", ".join(sorted(self._params))
            raise ValueError(f"{self.__class__.__name__} takes no parameters: {unknown}")

    def node_count(self, size: int) -> int:
        """Number of vertices produced for a requested size."""
        return size

    def check_size(self, size: int) -> None:
        if size < self.min_size:
            raise ValueError(
                f"{self.__class__.__name__} needs size >= {self.min_size}, got {size}"
            )

    @abstractmethod
    def _generate(self, size: int, rng: np.random.Generator) -> ProblemGraph:
        """Produce one instance from an already-seeded stream."""
        pass

    def generate(self, size: int, seed: int = 0) -> ProblemGraph:
        """Generate the instance for (size, seed)."""
        self.check_size(size)
        return self._generate(size, make_rng(seed))
