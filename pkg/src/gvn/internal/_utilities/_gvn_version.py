"""Detect the installed version of gvn, for `gvn --version`."""

from importlib.metadata import PackageNotFoundError, version

try:
    gvn_version = version("gvn")
except PackageNotFoundError:
    # running from a source checkout without an install
    gvn_version = "0.0.0"
