from ._data_validation import (
    _validate_at_least_one,
    _validate_bit,
    _validate_device_name,
    _validate_digit,
    _validate_finite,
    _validate_fraction,
    _validate_name,
    _validate_net_id,
    _validate_non_empty,
    _validate_non_negative,
    _validate_positive,
)
from ._gvn_version import gvn_version
