from __future__ import annotations

from typing import Mapping, Tuple

TNetId = str
TDeviceName = str
TGateInstance = str
TClusterTag = str

# cell port name -> parent net id
TPortBinding = Mapping[str, TNetId]

# (a, b, cin) with a, b in 0..9 and cin in 0..1
TBcdVector = Tuple[int, int, int]
# (carry, digit)
TBcdResult = Tuple[int, int]

TSeconds = float
THertz = float
TWatts = float
TJoules = float
TFarads = float
TAmperes = float
TVolts = float
