"""Flat `key=value` parameter files.

Keys are exactly the `ProcessParams` field names; values are SI reals; `#`
starts a comment. Keys missing from a file keep their default value.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import fields
from pathlib import Path
from typing import Dict, Union

from gvn.errors import InvalidArgumentException, convert_error

from .process_params import ProcessParams

HEADER = "# gvn process parameters, SI units\n"


def loads(text: str) -> ProcessParams:
    known = {f.name for f in fields(ProcessParams)}
    values: Dict[str, float] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep or not key or not value:
            raise InvalidArgumentException(f"line {line_number}: expected key=value, got {raw.strip()!r}")
        if key not in known:
            raise InvalidArgumentException(f"line {line_number}: unknown parameter {key!r}")
        if key in values:
            raise InvalidArgumentException(f"line {line_number}: parameter {key!r} given twice")
        try:
            number = float(value)
        except ValueError:
            raise InvalidArgumentException(f"line {line_number}: {key} is not a real number: {value!r}") from None
        if not math.isfinite(number):
            raise InvalidArgumentException(f"line {line_number}: {key} must be finite")
        values[key] = number
    return ProcessParams(**values)


def dumps(params: ProcessParams) -> str:
    """Canonical text of `params`; `loads(dumps(p)) == p` exactly."""
    return HEADER + "".join(f"{key}={value!r}\n" for key, value in params.as_dict().items())


def load(path: Union[str, Path]) -> ProcessParams:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidArgumentException(f"cannot read parameter file {path}: {convert_error(e).message}") from e
    return loads(text)


def digest(params: ProcessParams) -> str:
    """sha256 of the canonical dump; identical parameters give identical digests whatever file they came from."""
    return hashlib.sha256(dumps(params).encode("utf-8")).hexdigest()
