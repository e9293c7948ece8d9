"""
zerocap command line.

Usage:
    python -m cli.main <subcommand> [machine] [options]

Subcommands:
    validate   check a machine file against every invariant
    entropy    Perron value and topological entropy
    capacity   zero-error feedback capacity and zero-error capacity bounds
    zerotest   decide whether the zero-error capacity is zero (exit 10 if so)
    minfc      minimum ordinary feedback capacity over Markov parametrizations
    oracle     brute-force cross-checks (--check counts|confusability|universality|codebook)
    simulate   run the zero-error feedback scheme (--noise exhaustive|random:SEED|file:PATH)
    examples   reproduce the worked examples and compare with expected reports

`machine` is a corpus name (fig1, fig2, fig6) or a path to a machine file.

Examples:
    python -m cli.main capacity fig2 --q 3
    python -m cli.main zerotest fig2 --q 2
    python -m cli.main simulate fig6 --k 2 --noise exhaustive --json
"""

import argparse
import sys
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from rich.progress import Progress

from cli import render
from cli.examples import run_examples
from cli.manifest import RunManifest
from core.capacity.minimize import minimize_feedback_capacity
from core.capacity.report import blocklength_bounds, capacity_report
from core.channel.machine import NoiseMachine, resolve_machine, validate
from core.channel.session import render_transcript
from core.codec.scheme import achieved_rate, build_scheme
from core.codec.transmit import FixedSchedule, RandomSchedule, transmit, verify_exhaustive
from core.config.constants import (
    EXIT_CAPACITY_ZERO,
    EXIT_FAILURE,
    EXIT_INVALID,
    EXIT_IO,
    EXIT_OK,
    EXIT_RESOURCE,
)
from core.config.settings import Settings, load_settings
from core.coupled.zerotest import zero_capacity_test
from core.errors import (
    CapacityZeroError,
    ConvergenceError,
    InfeasibleNoiseError,
    LengthMismatchError,
    MachineSyntaxError,
    MachineValidationError,
    ParameterError,
    ResourceGuardError,
)
from core.oracle.codebook import is_zero_error_codebook, max_codebook
from core.oracle.confusability import confusable, confusable_by_enumeration
from core.oracle.noise import count_table
from core.oracle.universality import universality_oracle
from core.spectral.perron import spectral_summary

ORACLE_CHECKS = ("counts", "confusability", "universality", "codebook")
DEFAULT_ORACLE_N = {"counts": 8, "confusability": 3, "codebook": 3}

Outcome = Tuple[int, str, Dict[str, Any], Optional[str]]


# ============================================================================
# Arguments
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zerocap", description="Zero-error capacity toolkit for finite-state additive noise channels")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Write one machine-readable JSON report to stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    common.add_argument("--tol", type=float, default=None, help="Power iteration tolerance")
    common.add_argument("--max-iter", type=int, default=None, help="Power iteration cap")

    with_machine = argparse.ArgumentParser(add_help=False, parents=[common])
    with_machine.add_argument("machine", help="Corpus name (fig1, fig2, fig6) or machine file path")
    with_machine.add_argument("--q", type=int, default=None, help="Alphabet size override (above the largest label)")

    subparsers.add_parser("validate", parents=[with_machine], help="Check machine invariants")
    subparsers.add_parser("entropy", parents=[with_machine], help="Topological entropy")

    cap = subparsers.add_parser("capacity", parents=[with_machine], help="Zero-error capacities")
    cap.add_argument("--n", type=int, default=None, help="Also report the blocklength-n bounds")

    zero = subparsers.add_parser("zerotest", parents=[with_machine], help="Zero-capacity test")
    zero.add_argument("--subset-cap", type=int, default=None)

    minfc = subparsers.add_parser("minfc", parents=[with_machine], help="Minimize the feedback capacity")
    minfc.add_argument("--grid-points", type=int, default=None)
    minfc.add_argument("--refine-tol", type=float, default=None)

    oracle = subparsers.add_parser("oracle", parents=[with_machine], help="Brute-force cross-checks")
    oracle.add_argument("--check", choices=ORACLE_CHECKS, required=True)
    oracle.add_argument("--n", type=int, default=None, help="Largest length / blocklength checked")
    oracle.add_argument("--max-len", type=int, default=None, help="Universality oracle length bound")

    sim = subparsers.add_parser("simulate", parents=[with_machine], help="Zero-error feedback transmission")
    sim.add_argument("--k", type=int, required=True, help="Message length in q-ary digits")
    sim.add_argument("--message", type=int, default=0)
    sim.add_argument("--noise", default="random:0", help="exhaustive | random:SEED | file:PATH")
    sim.add_argument("--initial-state", type=int, default=0)
    sim.add_argument("--blocklength-cap", type=int, default=None)

    examples = subparsers.add_parser("examples", parents=[common], help="Reproduce the worked examples")
    examples.add_argument("--expected-dir", default=None, help="Directory of expected reports")
    return parser


_GLOBAL_ARGS = {"subcommand", "machine", "q", "json", "verbose"}


def manifest_from_args(args: argparse.Namespace) -> RunManifest:
    parameters = {key: value for key, value in sorted(vars(args).items()) if key not in _GLOBAL_ARGS}
    return RunManifest(
        subcommand=args.subcommand,
        machine=getattr(args, "machine", None),
        q=getattr(args, "q", None),
        parameters=parameters,
        output="json" if args.json else "human",
        verbose=args.verbose,
    )


def settings_for(manifest: RunManifest) -> Settings:
    return load_settings(
        perron_tol=manifest.param("tol"),
        perron_max_iter=manifest.param("max_iter"),
        subset_cap=manifest.param("subset_cap"),
        grid_points=manifest.param("grid_points"),
        refine_tol=manifest.param("refine_tol"),
        oracle_max_len=manifest.param("max_len"),
        scheme_blocklength_cap=manifest.param("blocklength_cap"),
    )


def load_for(manifest: RunManifest) -> NoiseMachine:
    machine = resolve_machine(manifest.machine)
    if manifest.q is not None and manifest.q != machine.q:
        machine = machine.with_alphabet(manifest.q)
        report = validate(machine)
        if not report.ok:
            raise MachineValidationError(report)
    return machine


# ============================================================================
# Subcommands
# ============================================================================

def _validate(manifest: RunManifest, settings: Settings) -> Outcome:
    machine = load_for(manifest)
    report = validate(machine)
    result = {
        "name": machine.name,
        "q": machine.q,
        "states": machine.num_states,
        "edges": len(machine.edges),
        "ok": report.ok,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks],
    }
    return EXIT_OK, "Validation", result, None


def _entropy(manifest: RunManifest, settings: Settings) -> Outcome:
    machine = load_for(manifest)
    summary = spectral_summary(machine, tol=settings.perron_tol, max_iter=settings.perron_max_iter)
    result = {
        "perron_value": summary.perron_value,
        "entropy_bits": summary.entropy_bits,
        "perron_vector": [float(v) for v in summary.perron_vector],
        "alpha": summary.alpha,
        "beta": summary.beta,
    }
    return EXIT_OK, "Topological entropy", result, None


def _capacity(manifest: RunManifest, settings: Settings) -> Outcome:
    machine = load_for(manifest)
    report = capacity_report(machine, tol=settings.perron_tol, max_iter=settings.perron_max_iter,
                             subset_cap=settings.subset_cap)
    result = report.model_dump(mode="json")
    n = manifest.param("n")
    if n is not None:
        bounds = blocklength_bounds(machine, n, tol=settings.perron_tol, max_iter=settings.perron_max_iter)
        result["blocklength_bounds"] = bounds.model_dump(mode="json")
    return EXIT_OK, "Capacity report", result, None


def _zerotest(manifest: RunManifest, settings: Settings) -> Outcome:
    machine = load_for(manifest)
    verdict = zero_capacity_test(machine, subset_cap=settings.subset_cap)
    result = {
        "verdict": verdict.verdict.value,
        "witness": list(verdict.witness) if verdict.witness is not None else None,
        "subsets_explored": verdict.subsets_explored,
    }
    code = EXIT_OK if verdict.positive else EXIT_CAPACITY_ZERO
    return code, "Zero-capacity test", result, None


def _minfc(manifest: RunManifest, settings: Settings) -> Outcome:
    machine = load_for(manifest)
    found = minimize_feedback_capacity(machine, grid_points=settings.grid_points, refine_tol=settings.refine_tol)
    report = capacity_report(machine, tol=settings.perron_tol, max_iter=settings.perron_max_iter,
                             subset_cap=settings.subset_cap)
    result = found.model_dump(mode="json")
    result["c0f_bits"] = report.c0f_bits
    result["gap_bits"] = found.value_bits - report.c0f_bits
    return EXIT_OK, "Minimum feedback capacity", result, None


def _oracle_counts(machine: NoiseMachine, n: int) -> Tuple[bool, Dict[str, Any]]:
    table = count_table(machine, n)
    ok = bool(table["matches"].all() and table["within_bounds"].all())
    rows = [{key: (value.item() if hasattr(value, "item") else value) for key, value in row.items()}
            for row in table.to_dict(orient="records")]
    return ok, {"max_n": n, "rows": rows}


def _oracle_confusability(machine: NoiseMachine, n: int) -> Tuple[bool, Dict[str, Any]]:
    words = list(product(range(machine.q), repeat=n))
    mismatches = []
    for x in words:
        for x2 in words:
            if confusable(machine, x, x2) != confusable_by_enumeration(machine, x, x2):
                mismatches.append([list(x), list(x2)])
    return not mismatches, {"n": n, "pairs": len(words) ** 2, "mismatches": mismatches}


def _oracle_universality(machine: NoiseMachine, max_len: int) -> Tuple[bool, Dict[str, Any]]:
    found = universality_oracle(machine, max_len=max_len)
    return found.agrees, {
        "max_len": found.max_len,
        "sequences_checked": found.sequences_checked,
        "counterexample": list(found.counterexample) if found.counterexample else None,
        "verdict": found.verdict.value,
        "witness": list(found.witness) if found.witness else None,
        "agrees": found.agrees,
    }


def _oracle_codebook(machine: NoiseMachine, n: int, settings: Settings) -> Tuple[bool, Dict[str, Any]]:
    report = capacity_report(machine, tol=settings.perron_tol, max_iter=settings.perron_max_iter,
                             subset_cap=settings.subset_cap)
    rows, ok = [], True
    for length in range(1, n + 1):
        book = max_codebook(machine, length, cap=settings.codebook_cap)
        sound = is_zero_error_codebook(machine, book.words)
        below = book.rate <= report.c0f_bits + 1e-9
        ok = ok and sound and below
        rows.append({"n": length, "size": book.size, "rate_bits": book.rate,
                     "zero_error": sound, "below_c0f": below})
    return ok, {"c0f_bits": report.c0f_bits, "c0_lower_bits": report.c0_lower_bits, "codebooks": rows}


def _oracle(manifest: RunManifest, settings: Settings) -> Outcome:
    machine = load_for(manifest)
    check = manifest.param("check")
    n = manifest.param("n", DEFAULT_ORACLE_N.get(check))
    if check == "counts":
        ok, result = _oracle_counts(machine, n)
    elif check == "confusability":
        ok, result = _oracle_confusability(machine, n)
    elif check == "universality":
        ok, result = _oracle_universality(machine, settings.oracle_max_len)
    else:
        ok, result = _oracle_codebook(machine, n, settings)
    result = {"check": check, "ok": ok, **result}
    return (EXIT_OK if ok else EXIT_FAILURE), f"Oracle: {check}", result, None


def _read_noise_file(path: str) -> List[int]:
    text = Path(path).read_text()
    try:
        return [int(token) for token in text.split()]
    except ValueError as exc:
        raise ValueError(f"Noise file {path} must hold whitespace-separated integers") from exc


def _simulate(manifest: RunManifest, settings: Settings) -> Outcome:
    machine = load_for(manifest)
    k = manifest.param("k")
    scheme = build_scheme(machine, k, blocklength_cap=settings.scheme_blocklength_cap,
                          codebook_cap=settings.codebook_cap, enumeration_cap=settings.enumeration_cap,
                          subset_cap=settings.subset_cap)
    result: Dict[str, Any] = {
        "k": k,
        "base_blocklength": scheme.base.n,
        "base_codebook": [list(w) for w in scheme.base.words],
        "stages": [{"kind": s.kind.value, "count": s.count, "digits": s.digits, "uses": s.uses, "residual": s.residual}
                   for s in scheme.stages],
        "planned_uses": scheme.total_uses,
        "achieved_rate_bits": achieved_rate(scheme),
    }
    noise = manifest.param("noise")

    if noise == "exhaustive":
        if manifest.output == "human":
            with Progress(console=render.stderr, transient=True) as progress:
                task = progress.add_task("verifying", total=scheme.message_count)
                summary = verify_exhaustive(scheme, cap=settings.enumeration_cap,
                                            on_message=lambda _: progress.advance(task))
        else:
            summary = verify_exhaustive(scheme, cap=settings.enumeration_cap)
        result.update({
            "messages": summary.messages,
            "schedules": summary.schedules,
            "transmissions": summary.transmissions,
            "failures": len(summary.failures),
            "worst_case_uses": summary.worst_case_uses,
        })
        return (EXIT_OK if summary.ok else EXIT_FAILURE), "Exhaustive verification", result, None

    initial_state = manifest.param("initial_state", 0)
    if noise.startswith("random:"):
        schedule = RandomSchedule(machine, initial_state, seed=int(noise.split(":", 1)[1]))
    elif noise.startswith("file:"):
        schedule = FixedSchedule(initial_state, _read_noise_file(noise.split(":", 1)[1]))
    else:
        raise ValueError(f"Unknown noise source '{noise}'; use exhaustive, random:SEED or file:PATH")

    outcome = transmit(scheme, manifest.param("message", 0), schedule)
    transcript = render_transcript(outcome.session)
    result.update({
        "message": outcome.message,
        "decoded": outcome.decoded,
        "uses": outcome.uses,
        "transcript": transcript.splitlines()[1:],
    })
    return (EXIT_OK if outcome.ok else EXIT_FAILURE), "Transmission", result, transcript


def _examples(manifest: RunManifest, settings: Settings) -> Outcome:
    directory = manifest.param("expected_dir")
    rows = run_examples(settings, Path(directory) if directory else None)
    ok = all(row["ok"] for row in rows)
    result = {"ok": ok, "checked": len(rows), "rows": rows}
    return (EXIT_OK if ok else EXIT_FAILURE), "Worked examples", result, None


HANDLERS = {
    "validate": _validate,
    "entropy": _entropy,
    "capacity": _capacity,
    "zerotest": _zerotest,
    "minfc": _minfc,
    "oracle": _oracle,
    "simulate": _simulate,
    "examples": _examples,
}


# ============================================================================
# Entry point
# ============================================================================

def _describe_validation(exc: MachineValidationError) -> str:
    lines = [str(exc)]
    for check in exc.report.failures:
        lines.append(f"  {check.name}: {check.detail}")
    return "\n".join(lines)


def run(manifest: RunManifest) -> int:
    """
    Execute one manifest and print its report.

    Returns the process exit code.
    """
    try:
        settings = settings_for(manifest)
        code, title, result, text = HANDLERS[manifest.subcommand](manifest, settings)
    except MachineValidationError as exc:
        render.error(_describe_validation(exc))
        return EXIT_INVALID
    except MachineSyntaxError as exc:
        render.error(str(exc))
        return EXIT_INVALID
    except (ResourceGuardError, ConvergenceError) as exc:
        render.error(str(exc))
        return EXIT_RESOURCE
    except (CapacityZeroError, ParameterError, InfeasibleNoiseError, LengthMismatchError) as exc:
        render.error(str(exc))
        return EXIT_FAILURE
    except OSError as exc:
        render.error(f"{exc.strerror or exc}: {exc.filename or ''}".rstrip(": "))
        return EXIT_IO
    except ValueError as exc:
        render.error(str(exc))
        return EXIT_INVALID

    render.emit(manifest, title, result, text)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    manifest = manifest_from_args(args)
    render.configure_logging(manifest.verbose)
    return run(manifest)


if __name__ == "__main__":
    sys.exit(main())
