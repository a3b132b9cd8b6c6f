"""`gvn` command line: generate, check, benchmark and simulate adder netlists.

Exit status is 0 when everything passed, 1 when a functional check failed
and 2 for usage errors, infeasible timing and other failures.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence, TextIO

from gvn import logs
from gvn.bench import ReportFormat, emit, sweep, verify_variant
from gvn.config import (
    BenchConfiguration,
    BenchConfigurations,
    ProcessParams,
    ProcessParamsConfigurations,
    dumps,
)
from gvn.errors import GvnException, InvalidArgumentException, convert_error
from gvn.generators import Variant, generate
from gvn.internal._utilities import gvn_version
from gvn.netlist import parse, serialize
from gvn.responses import VerifyVariant
from gvn.sim import SimState, parse_stimulus, write_event_trace

EXIT_OK = 0
EXIT_FUNCTIONAL_FAILURE = 1
EXIT_ERROR = 2

ALL_VARIANTS = "all"


def _variants(text: str) -> List[Variant]:
    if text == ALL_VARIANTS:
        return list(Variant)
    try:
        return [Variant(name.strip().lower()) for name in text.split(",") if name.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _frequencies(text: str) -> List[float]:
    try:
        return [float(value) for value in text.split(",") if value.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidArgumentException(f"cannot read {path}: {e.strerror}") from e


def _write_text(text: str, output: Optional[Path], stdout: TextIO) -> None:
    if output is None:
        stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise convert_error(e) from e


def _params(args: argparse.Namespace) -> ProcessParams:
    if args.params is None:
        return ProcessParamsConfigurations.Default.latest()
    return ProcessParamsConfigurations.from_file(args.params)


def _bench(args: argparse.Namespace) -> BenchConfiguration:
    bench = BenchConfigurations.Default.latest()
    if getattr(args, "seed", None) is not None:
        bench = bench.with_seed(args.seed)
    if getattr(args, "cycles", None) is not None:
        bench = bench.with_cycles(args.cycles)
    if args.duty_guard is not None:
        bench = bench.with_guard_margin(args.duty_guard)
    if args.wake_cap is not None:
        bench = bench.with_wake_cap_F(args.wake_cap)
    return bench


def _gen(args: argparse.Namespace, stdout: TextIO) -> int:
    netlist = generate(args.variant)
    if args.summary:
        _write_text(netlist.summary() + "\n", args.output, stdout)
    else:
        _write_text(serialize(netlist).decode("utf-8"), args.output, stdout)
    return EXIT_OK


def _check(args: argparse.Namespace, stdout: TextIO) -> int:
    params, bench = _params(args), _bench(args)
    status = EXIT_OK
    for variant in args.variant:
        response = verify_variant(variant, args.freq, params, bench)
        if isinstance(response, VerifyVariant.Pass):
            stdout.write(f"{variant.display_name}: pass ({response.vectors_checked}/{response.vectors_checked})\n")
        elif isinstance(response, VerifyVariant.Fail):
            passed = response.vectors_checked - len(response.counterexamples)
            stdout.write(f"{variant.display_name}: FAIL ({passed}/{response.vectors_checked})\n")
            for counterexample in response.counterexamples:
                stdout.write(f"  {counterexample}\n")
            status = max(status, EXIT_FUNCTIONAL_FAILURE)
        elif isinstance(response, VerifyVariant.Error):
            stdout.write(f"{variant.display_name}: error: {response.message}\n")
            status = EXIT_ERROR
    return status


def _bench_command(args: argparse.Namespace, stdout: TextIO) -> int:
    report = sweep(args.variants, args.freqs, _params(args), _bench(args))
    emit(report, args.format, args.output if args.output is not None else stdout)
    return EXIT_OK


def _sim(args: argparse.Namespace, stdout: TextIO) -> int:
    netlist = parse(_read_text(args.netlist))
    steps = parse_stimulus(_read_text(args.vectors))
    state = SimState(netlist, _params(args))
    for index, step in enumerate(steps):
        state.settle(until_s=step.at_s)
        state.apply_inputs(step.assignments, step.at_s)
        following = steps[index + 1].at_s if index + 1 < len(steps) else None
        state.settle(until_s=following)
        outputs = " ".join(f"{net}={level}" for net, level in state.read_outputs().items())
        stdout.write(f"{step.at_s:.5e} {outputs}\n")
    if args.trace is not None:
        write_event_trace(state.events, args.trace)
    return EXIT_OK


def _params_command(args: argparse.Namespace, stdout: TextIO) -> int:
    params = ProcessParamsConfigurations.Default.latest() if args.dump else _params(args)
    _write_text(dumps(params), args.output, stdout)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gvn", description="Generate, check, benchmark and simulate CMOS BCD adder netlists."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {gvn_version}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="INFO, DEBUG, then TRACE logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    def params_option(command: argparse.ArgumentParser) -> None:
        command.add_argument("--params", type=Path, help="process parameter file (default: shipped calibration)")

    def gating_options(command: argparse.ArgumentParser) -> None:
        command.add_argument("--duty-guard", type=float, help="awake-window guard margin (default 0.1)")
        command.add_argument("--wake-cap", type=float, help="virtual-rail capacitance charged per wake, F")

    gen = commands.add_parser("gen", help="write a generated adder netlist")
    gen.add_argument("--variant", type=Variant, choices=list(Variant), required=True)
    gen.add_argument("--summary", action="store_true", help="print device and net counts instead of the netlist")
    gen.add_argument("-o", "--output", type=Path)
    gen.set_defaults(handler=_gen)

    check = commands.add_parser("check", help="verify variants on all 200 vectors")
    check.add_argument("--variant", type=_variants, default=list(Variant), help="variant, comma list or 'all'")
    check.add_argument("--freq", type=float, required=True, help="clock frequency, Hz")
    params_option(check)
    gating_options(check)
    check.set_defaults(handler=_check)

    bench = commands.add_parser("bench", help="sweep power, delay and PDP over frequencies")
    bench.add_argument("--freqs", type=_frequencies, default=[50e6, 100e6, 200e6], help="comma list, Hz")
    bench.add_argument("--variants", type=_variants, default=list(Variant), help="comma list or 'all'")
    bench.add_argument("--seed", type=int)
    bench.add_argument("--cycles", type=int)
    bench.add_argument("--format", type=ReportFormat, choices=list(ReportFormat), default=ReportFormat.TABLE)
    bench.add_argument("-o", "--output", type=Path)
    params_option(bench)
    gating_options(bench)
    bench.set_defaults(handler=_bench_command)

    sim = commands.add_parser("sim", help="simulate a netlist file under a stimulus file")
    sim.add_argument("--netlist", type=Path, required=True)
    sim.add_argument("--vectors", type=Path, required=True)
    sim.add_argument("--trace", type=Path, help="write the event trace as csv")
    params_option(sim)
    sim.set_defaults(handler=_sim)

    params = commands.add_parser("params", help="print the process parameters in use, normalized")
    params.add_argument("--dump", action="store_true", help="print the shipped defaults even when --params is given")
    params.add_argument("-o", "--output", type=Path)
    params_option(params)
    params.set_defaults(handler=_params_command)
    return parser


_Handler = Callable[[argparse.Namespace, TextIO], int]


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logs.configure_console_logging(args.verbose)

    handler: _Handler = args.handler
    try:
        return handler(args, stdout)
    except GvnException as e:
        stderr.write(f"gvn: {e.message_wrapper}: {e.message}\n")
        return EXIT_ERROR
    except OSError as e:
        error = convert_error(e)
        stderr.write(f"gvn: {error.message_wrapper}: {error.message}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
