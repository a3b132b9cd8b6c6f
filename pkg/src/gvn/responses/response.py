from __future__ import annotations

from abc import ABC
from typing import Any, no_type_check


class Response(ABC):
    """Parent of all result objects."""

    # Attributes are heterogeneous; rendering works on Any.
    @no_type_check
    def _render_as_str(self, max_collection_length: int = 5) -> str:
        class_name = self.__class__.__qualname__
        attributes = vars(self)
        if not attributes:
            return f"{class_name}()"

        message_parts = []
        for attribute, value in attributes.items():
            if isinstance(value, (list, tuple)) and len(value) > max_collection_length:
                shown = ", ".join(repr(item) for item in value[:max_collection_length])
                message_parts.append(f"{attribute}=[{shown}, ... {len(value) - max_collection_length} more]")
            else:
                message_parts.append(f"{attribute}={value!r}")
        return f"{class_name}({', '.join(message_parts)})"

    @no_type_check
    def __repr__(self) -> str:
        return self._render_as_str(max_collection_length=1024)

    @no_type_check
    def __str__(self) -> str:
        return self._render_as_str()

    @no_type_check
    def __eq__(self, other: Any) -> bool:
        if other is None or type(self) != type(other):
            return False
        return vars(self) == vars(other)

    @no_type_check
    def __hash__(self) -> int:
        state = [type(self)]
        state.extend((key, repr(value)) for key, value in sorted(vars(self).items()))
        return hash(tuple(state))
