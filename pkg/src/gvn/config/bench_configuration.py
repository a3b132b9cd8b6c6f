from __future__ import annotations

from abc import ABC, abstractmethod

from gvn.internal._utilities import (
    _validate_at_least_one,
    _validate_non_negative,
    _validate_positive,
)


class BenchConfigurationBase(ABC):
    @abstractmethod
    def get_seed(self) -> int:
        pass

    @abstractmethod
    def with_seed(self, seed: int) -> BenchConfiguration:
        pass

    @abstractmethod
    def get_cycles(self) -> int:
        pass

    @abstractmethod
    def with_cycles(self, cycles: int) -> BenchConfiguration:
        pass

    @abstractmethod
    def get_oscillation_bound(self) -> int:
        pass

    @abstractmethod
    def get_guard_margin(self) -> float:
        pass

    @abstractmethod
    def with_guard_margin(self, guard_margin: float) -> BenchConfiguration:
        pass

    @abstractmethod
    def get_wake_cap_F(self) -> float:
        pass

    @abstractmethod
    def with_wake_cap_F(self, wake_cap_F: float) -> BenchConfiguration:
        pass

    @abstractmethod
    def get_resolution_s(self) -> float:
        pass

    @abstractmethod
    def get_max_stack_depth(self) -> int:
        pass


class BenchConfiguration(BenchConfigurationBase):
    """Simulation and benchmark settings that are not process physics."""

    def __init__(
        self,
        seed: int,
        cycles: int,
        oscillation_bound: int,
        guard_margin: float,
        wake_cap_F: float,
        resolution_s: float,
        max_stack_depth: int,
    ):
        """Instantiate a BenchConfiguration.

        Args:
            seed (int): seed of the random vector stream used for average power.
            cycles (int): number of random vectors, one per clock cycle.
            oscillation_bound (int): events one `settle` may process before giving up.
            guard_margin (float): extra awake time per cluster, as a fraction of its stage delay.
            wake_cap_F (float): virtual-rail capacitance recharged on every cluster wake-up.
            resolution_s (float): simulator time quantum; clock offsets are rounded up to it.
            max_stack_depth (int): longest series OFF stack considered by leakage estimation.
        """
        _validate_non_negative(seed, "seed")
        _validate_at_least_one(cycles, "cycles")
        _validate_at_least_one(oscillation_bound, "oscillation_bound")
        _validate_non_negative(guard_margin, "guard_margin")
        _validate_non_negative(wake_cap_F, "wake_cap_F")
        _validate_positive(resolution_s, "resolution_s")
        _validate_at_least_one(max_stack_depth, "max_stack_depth")
        self._seed = seed
        self._cycles = cycles
        self._oscillation_bound = oscillation_bound
        self._guard_margin = guard_margin
        self._wake_cap_F = wake_cap_F
        self._resolution_s = resolution_s
        self._max_stack_depth = max_stack_depth

    def _copy(self, **overrides: float) -> BenchConfiguration:
        values = dict(
            seed=self._seed,
            cycles=self._cycles,
            oscillation_bound=self._oscillation_bound,
            guard_margin=self._guard_margin,
            wake_cap_F=self._wake_cap_F,
            resolution_s=self._resolution_s,
            max_stack_depth=self._max_stack_depth,
        )
        values.update(overrides)
        return BenchConfiguration(**values)  # type: ignore[arg-type]

    def get_seed(self) -> int:
        return self._seed

    def with_seed(self, seed: int) -> BenchConfiguration:
        """Copy constructor for overriding the random stream seed.

        Args:
            seed (int): the new seed.

        Returns:
            BenchConfiguration: the new BenchConfiguration with the specified seed.
        """
        return self._copy(seed=seed)

    def get_cycles(self) -> int:
        return self._cycles

    def with_cycles(self, cycles: int) -> BenchConfiguration:
        """Copy constructor for overriding the random stream length.

        Args:
            cycles (int): number of clock cycles to drive.

        Returns:
            BenchConfiguration: the new BenchConfiguration with the specified cycle count.
        """
        return self._copy(cycles=cycles)

    def get_oscillation_bound(self) -> int:
        return self._oscillation_bound

    def with_oscillation_bound(self, oscillation_bound: int) -> BenchConfiguration:
        return self._copy(oscillation_bound=oscillation_bound)

    def get_guard_margin(self) -> float:
        return self._guard_margin

    def with_guard_margin(self, guard_margin: float) -> BenchConfiguration:
        return self._copy(guard_margin=guard_margin)

    def get_wake_cap_F(self) -> float:
        return self._wake_cap_F

    def with_wake_cap_F(self, wake_cap_F: float) -> BenchConfiguration:
        return self._copy(wake_cap_F=wake_cap_F)

    def get_resolution_s(self) -> float:
        return self._resolution_s

    def with_resolution_s(self, resolution_s: float) -> BenchConfiguration:
        return self._copy(resolution_s=resolution_s)

    def get_max_stack_depth(self) -> int:
        return self._max_stack_depth

    def with_max_stack_depth(self, max_stack_depth: int) -> BenchConfiguration:
        return self._copy(max_stack_depth=max_stack_depth)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(seed={self._seed}, cycles={self._cycles}, "
            f"oscillation_bound={self._oscillation_bound}, guard_margin={self._guard_margin}, "
            f"wake_cap_F={self._wake_cap_F}, resolution_s={self._resolution_s}, "
            f"max_stack_depth={self._max_stack_depth})"
        )
