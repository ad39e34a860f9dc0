from abc import ABC, abstractmethod
from functools import cached_property
from typing import Any, ClassVar

from topologies.coupling_map import CouplingMap


class Topology(ABC):
    """Abstract base class for parameterized coupling-map families."""

    # parameter name -> default value (None means required)
    parameters: ClassVar[dict[str, int | None]] = {}
    aliases: ClassVar[tuple[str, ...]] = ()
    supports_shuffle: ClassVar[bool] = False

    def __init__(self, **params: Any):
        merged = {key: default for key, default in self.parameters.items()}
        unknown = set(params) - set(self.parameters)
        if unknown:
            raise ValueError(
                f"{self.__class__.__name__} got unknown parameters: "
                f"{', '.join(sorted(unknown))}"
            )
        merged.update(params)
        self._params = merged
        self._validate_params()

    @property
    def params(self) -> dict[str, Any]:
        """Get a copy of the resolved parameters."""
        return dict(self._params)

    def _validate_params(self) -> None:
        """Validate the parameters; every value must be a positive integer."""
        for key, value in self._params.items():
            if value is None:
                raise ValueError(f"{self.__class__.__name__} needs parameter '{key}'")
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"Parameter '{key}' must be a positive integer, got {value!r}")

    @abstractmethod
    def _build(self) -> CouplingMap:
        """Construct the coupling map for the current parameters."""
        pass

    @cached_property
    def coupling_map(self) -> CouplingMap:
        return self._build()

    def build(self) -> CouplingMap:
        """Get the coupling map, building it on first use."""
        return self.coupling_map

    @property
    def qubit_count(self) -> int:
        """Get the number of physical qubits."""
        return self.coupling_map.n

    @classmethod
    def for_width(cls, width: int) -> "Topology":
        """Smallest instance of this family with at least `width` qubits."""
        raise ValueError(f"{cls.__name__} cannot be sized automatically")

    def __repr__(self) -> str:
        args = ", ".join(f"{key}={value}" for key, value in self._params.items())
        return f"{self.__class__.__name__}({args})"
