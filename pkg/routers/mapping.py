from collections.abc import Sequence


class Mapping:
    """Bijection between logical and physical qubits.

    Logical ids at or above the circuit width stand for idle ancilla slots.
    """

    def __init__(self, physical_of: Sequence[int]):
        n = len(physical_of)
        if sorted(physical_of) != list(range(n)):
            raise ValueError(f"Mapping must be a permutation of 0..{n - 1}")
        self._physical = list(physical_of)
        self._logical = [0] * n
        for logical, physical in enumerate(self._physical):
            self._logical[physical] = logical

    @classmethod
    def identity(cls, n: int) -> "Mapping":
        return cls(range(n))

    @property
    def size(self) -> int:
        """Get the number of physical slots."""
        return len(self._physical)

    def physical(self, logical: int) -> int:
        return self._physical[logical]

    def logical(self, physical: int) -> int:
        return self._logical[physical]

    def swap(self, p: int, q: int) -> None:
        """Exchange the logical qubits sitting on physical p and q."""
        a, b = self._logical[p], self._logical[q]
        self._logical[p], self._logical[q] = b, a
        self._physical[a], self._physical[b] = q, p

    def copy(self) -> "Mapping":
        """Return an independent copy; swaps on it leave this mapping alone."""
        return Mapping(self._physical)

    def physical_of(self) -> tuple[int, ...]:
        return tuple(self._physical)

    def placement(self, width: int) -> dict[int, int]:
        """Physical position of each of the first `width` logical qubits."""
        return {logical: self._physical[logical] for logical in range(width)}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Mapping) and self._physical == other._physical

    def __hash__(self) -> int:
        return hash(tuple(self._physical))

    def __repr__(self) -> str:
        return f"Mapping({self._physical})"
