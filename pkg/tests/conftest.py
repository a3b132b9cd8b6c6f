from __future__ import annotations

from dataclasses import replace
from typing import Dict

import pytest

from gvn.bench import BenchReport, sweep
from gvn.config import BenchConfiguration, BenchConfigurations, ProcessParams, ProcessParamsConfigurations
from gvn.generators import Variant, bcd_conventional, bcd_dvt, bcd_gated
from gvn.netlist import Netlist

#################
# Shared settings
#################

TEST_PARAMS = ProcessParamsConfigurations.Default.latest()
TEST_BENCH = BenchConfigurations.Quick.latest()
BENCH_FREQUENCIES_HZ = [50e6, 100e6, 200e6]


@pytest.fixture(scope="session")
def params() -> ProcessParams:
    return TEST_PARAMS


@pytest.fixture(scope="session")
def bench() -> BenchConfiguration:
    return TEST_BENCH


######################
# Generated netlists
######################


@pytest.fixture(scope="session")
def conventional() -> Netlist:
    return bcd_conventional()


@pytest.fixture(scope="session")
def dvt() -> Netlist:
    return bcd_dvt()


@pytest.fixture(scope="session")
def gated() -> Netlist:
    return bcd_gated()


@pytest.fixture(scope="session")
def adders(conventional: Netlist, dvt: Netlist, gated: Netlist) -> Dict[Variant, Netlist]:
    return {Variant.CONVENTIONAL: conventional, Variant.DVT: dvt, Variant.GATED: gated}


@pytest.fixture(scope="session")
def miswired_carry_detect(conventional: Netlist) -> Netlist:
    """Conventional adder whose z3*z1 product term reads z0 instead of z1.

    Sums of 9 now get a spurious +6 and sums of 10 (e.g. 5 + 5) miss theirs: 38 of the 200 vectors fail.
    """
    return conventional.with_devices(
        replace(device, gate="z0") if device.name.startswith("cd.nand2b.") and device.gate == "z1" else device
        for device in conventional.devices
    )


#################
# Measured report
#################


@pytest.fixture(scope="session")
def report(params: ProcessParams, bench: BenchConfiguration) -> BenchReport:
    return sweep(list(Variant), BENCH_FREQUENCIES_HZ, params, bench)
