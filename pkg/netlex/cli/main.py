"""
netlex CLI - Main Command Structure
Click-based command-line interface for network statistics and sampling experiments.

Exit codes: 0 success, 1 unexpected error, 2 usage, 3 parse, 4 I/O, 5 computation.
"""

import json
import tempfile
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import click

from netlex import __version__
from netlex.cli.error_handling import handle_errors
from netlex.cli.progress import (
    SimpleProgress,
    format_metric_summaries,
    format_robustness,
    format_stats_table,
    show_success,
    show_warning,
)
from netlex.core import datasets as dataset_registry
from netlex.core.config_manager import ConfigManager
from netlex.core.manager import LoadedGraph, NetlexManager
from netlex.exporters.output_dir import MANIFEST_NAME, OutputDirectory
from netlex.models.exceptions import (
    InputOutputError,
    ReproducibilityError,
    ValidationError,
)
from netlex.models.graph import GraphFormat
from netlex.models.manifest import RunManifest
from netlex.models.metrics import MetricName
from netlex.models.sampling import ExhaustionPolicy, SamplerConfig, SamplingMethod
from netlex.models.stats import CCGMode
from netlex.utils.file_utils import file_record, read_json_file
from netlex.utils.logging_utils import setup_logging, shutdown_logging
from netlex.utils.validation import (
    validate_dataset_name,
    validate_input_files,
    validate_sampling_request,
)

REPLAYABLE_COMMANDS = ("stats", "metrics", "sample", "robustness", "report")


# ============================================================================
# Shared options
# ============================================================================


def common_options(func):
    """--config, --workers and --out-dir, shared by every computing command."""
    func = click.option(
        "--out-dir",
        type=click.Path(file_okay=False, path_type=Path),
        default=Path("netlex_out"),
        show_default=True,
        help="Directory for outputs, manifest and log",
    )(func)
    func = click.option(
        "--workers", type=int, default=None, help="Worker processes (overrides config)"
    )(func)
    func = click.option(
        "--config",
        "config_path",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="JSON configuration file",
    )(func)
    return func


def format_options(func):
    func = click.option("--lcc", is_flag=True, help="Keep only the largest connected component")(
        func
    )
    func = click.option(
        "--format",
        "format_tag",
        type=click.Choice([f.value for f in GraphFormat]),
        default=None,
        help="Input format (default: from file extension)",
    )(func)
    return func


def input_options(func):
    func = click.option("--name", default=None, help="Dataset name used in outputs")(func)
    func = format_options(func)
    func = click.option(
        "--input",
        "input_path",
        type=click.Path(dir_okay=False, path_type=Path),
        required=True,
        help="Graph file (SNAP edge list or Pajek .net)",
    )(func)
    return func


def sampling_options(required: bool = True):
    # click skips the required check when any default is given
    extra: Dict[str, Any] = {"required": True} if required else {"default": None}

    def decorator(func):
        func = click.option(
            "--on-exhaustion",
            type=click.Choice([p.value for p in ExhaustionPolicy]),
            default=ExhaustionPolicy.ERROR.value,
            show_default=True,
            help="What to do when the source runs out of reachable nodes",
        )(func)
        func = click.option("--seed", type=int, help="Base RNG seed", **extra)(func)
        func = click.option("--size", type=int, help="Nodes per sample", **extra)(func)
        func = click.option(
            "--method",
            type=click.Choice([m.value for m in SamplingMethod]),
            help="Sampling method",
            **extra,
        )(func)
        return func

    return decorator


def _jsonable(value: Any) -> Any:
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def params_to_args(command: click.Command, params: Dict[str, Any]) -> List[str]:
    """Rebuild a command line for ``command`` from recorded parameter values."""
    args: List[str] = []
    for param in command.params:
        if not isinstance(param, click.Option) or param.name not in params:
            continue
        value = params[param.name]
        if value is None:
            continue
        if param.is_flag:
            if param.secondary_opts:
                args.append(param.opts[0] if value else param.secondary_opts[0])
            elif value:
                args.append(param.opts[0])
            continue
        for item in value if param.multiple else [value]:
            args.extend([param.opts[0], str(_jsonable(item))])
    return args


# ============================================================================
# Command runs
# ============================================================================


class CommandRun:
    """
    One command invocation: effective config, output directory, logging and
    the run manifest. Outputs are rolled back when the command fails.
    """

    def __init__(
        self,
        command: str,
        params: Dict[str, Any],
        out_dir: Path,
        config_path: Optional[Path] = None,
        seed: Optional[int] = None,
        **overrides: Any,
    ):
        self.command = command
        self.params = {k: _jsonable(v) for k, v in params.items()}
        self.out_dir = out_dir
        self.config_path = config_path
        self.seed = seed
        self.overrides = overrides
        self.inputs: List[Path] = []
        self.details: Dict[str, Any] = {}

    def __enter__(self) -> "CommandRun":
        config_manager = ConfigManager(self.config_path)
        config_manager.load_config()
        config_manager.with_overrides(**self.overrides)
        self.manager = NetlexManager(config_manager)
        self.out = OutputDirectory(self.out_dir)
        verbose = bool((click.get_current_context().find_root().obj or {}).get("verbose"))
        setup_logging("DEBUG" if verbose else self.manager.config.log_level, self.out_dir)
        if self.config_path is not None:
            self.inputs.append(self.config_path)
        return self

    def load(
        self, path: Path, format_tag: Optional[str], lcc: bool, name: Optional[str]
    ) -> LoadedGraph:
        if name is not None:
            validate_dataset_name(name)
        loaded = self.manager.load(path, format_tag, lcc, name)
        self.inputs.append(Path(path))
        return loaded

    def __exit__(self, exc_type, exc, tb) -> bool:
        try:
            if exc is not None:
                self.out.rollback()
                return False
            manifest = RunManifest(
                command=self.command,
                tool_version=__version__,
                seed=self.seed,
                params=self.params,
                config=self.manager.config_manager.as_dict(),
                inputs=[file_record(p) for p in self.inputs],
                details=self.details,
            )
            self.out.write_manifest(manifest)
            return False
        finally:
            shutdown_logging()


def _sampler(
    method: Optional[str], size: Optional[int], seed: Optional[int], on_exhaustion: str, count: int
) -> SamplerConfig:
    missing = [f"--{n}" for n, v in (("method", method), ("size", size), ("seed", seed)) if v is None]
    if missing:
        raise ValidationError(
            f"missing {', '.join(missing)}", ["Sampling needs --method, --size and --seed"]
        )
    validate_sampling_request(size, count, seed)
    return SamplerConfig(
        method=SamplingMethod(method),
        target_size=size,
        rng_seed=seed,
        on_exhaustion=ExhaustionPolicy(on_exhaustion),
    )


def _relative(out: OutputDirectory) -> List[str]:
    return [p.name for p in out.written]


# ============================================================================
# Command group
# ============================================================================


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Enable debug logging")
@click.version_option(__version__, prog_name="nlex")
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """
    nlex - network statistics, node metrics and sampling robustness

    Use --help on any command for details:
      nlex stats --help
      nlex robustness --help
      nlex report --help
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose


# ============================================================================
# Statistics and metrics
# ============================================================================


@cli.command("stats")
@input_options
@click.option(
    "--ccg-mode",
    type=click.Choice([m.value for m in CCGMode]),
    default=None,
    help="Global clustering definition (default from config: mean-local)",
)
@common_options
@handle_errors("stats")
def stats_cmd(
    input_path: Path,
    format_tag: Optional[str],
    lcc: bool,
    name: Optional[str],
    ccg_mode: Optional[str],
    config_path: Optional[Path],
    workers: Optional[int],
    out_dir: Path,
) -> None:
    """
    Basic statistics of one graph: nodes, edges, density, HD, diameter,
    girth, CCG, APL and alpha

    Examples:
      nlex stats --input Geom.net --lcc
      nlex stats --input soc-Epinions1.txt --ccg-mode transitivity
    """
    params = click.get_current_context().params
    with CommandRun(
        "stats", params, out_dir, config_path, max_workers=workers, ccg_mode=ccg_mode
    ) as run:
        loaded = run.load(input_path, format_tag, lcc, name)
        stats = run.manager.stats(loaded, run.out)
    click.echo(format_stats_table([stats]))
    show_success("Statistics written", str(out_dir), _relative(run.out))


@cli.command("metrics")
@input_options
@click.option(
    "--metrics",
    "metric_names",
    default="all",
    show_default=True,
    help="Comma-separated metric names or 'all'",
)
@click.option(
    "--normalized/--raw",
    default=False,
    show_default=True,
    help="Also write values mapped into [0, 1]",
)
@common_options
@handle_errors("metrics")
def metrics_cmd(
    input_path: Path,
    format_tag: Optional[str],
    lcc: bool,
    name: Optional[str],
    metric_names: str,
    normalized: bool,
    config_path: Optional[Path],
    workers: Optional[int],
    out_dir: Path,
) -> None:
    """
    Per-node metrics, one CSV per metric

    Metrics: degree, local-cc, strength, betweenness, eccentricity, closeness

    Examples:
      nlex metrics --input graph.txt --metrics closeness,betweenness
      nlex metrics --input graph.txt --normalized
    """
    metrics = MetricName.parse_list(metric_names)
    params = click.get_current_context().params
    with CommandRun("metrics", params, out_dir, config_path, max_workers=workers) as run:
        loaded = run.load(input_path, format_tag, lcc, name)
        vectors = run.manager.metrics(loaded, metrics, run.out, normalized)
    click.echo(format_metric_summaries(vectors))
    show_success("Metrics written", str(out_dir), _relative(run.out))


# ============================================================================
# Sampling experiments
# ============================================================================


@cli.command("sample")
@input_options
@sampling_options(required=True)
@click.option("--count", type=int, default=10, show_default=True, help="Number of samples")
@common_options
@handle_errors("sample")
def sample_cmd(
    input_path: Path,
    format_tag: Optional[str],
    lcc: bool,
    name: Optional[str],
    method: str,
    size: int,
    seed: int,
    on_exhaustion: str,
    count: int,
    config_path: Optional[Path],
    workers: Optional[int],
    out_dir: Path,
) -> None:
    """
    Draw COUNT samples of SIZE nodes; sample i uses seed SEED + i

    Examples:
      nlex sample --input soc-Epinions1.txt --method snowball --size 500 --seed 42
    """
    sampler = _sampler(method, size, seed, on_exhaustion, count)
    params = click.get_current_context().params
    with CommandRun("sample", params, out_dir, config_path, seed, max_workers=workers) as run:
        loaded = run.load(input_path, format_tag, lcc, name)
        sample_run = run.manager.sample(loaded, sampler, count, run.out)
        run.details["sample_run"] = sample_run.manifest()
    for event in sample_run.exhaustion_events:
        show_warning(f"sample {event.sample_index}: {event.kind}: {event.detail}")
    show_success(f"{count} samples written", str(out_dir), _relative(run.out))


@cli.command("robustness")
@input_options
@sampling_options(required=True)
@click.option("--count", type=int, default=10, show_default=True, help="Number of samples")
@click.option(
    "--metrics",
    "metric_names",
    default="all",
    show_default=True,
    help="Comma-separated metric names or 'all'",
)
@click.option(
    "--threshold",
    type=float,
    default=None,
    help="Flag samples correlating below this (default from config: 0.90)",
)
@common_options
@handle_errors("robustness")
def robustness_cmd(
    input_path: Path,
    format_tag: Optional[str],
    lcc: bool,
    name: Optional[str],
    method: str,
    size: int,
    seed: int,
    on_exhaustion: str,
    count: int,
    metric_names: str,
    threshold: Optional[float],
    config_path: Optional[Path],
    workers: Optional[int],
    out_dir: Path,
) -> None:
    """
    Sample, bin each metric, average the bins and correlate every sample
    with the average; samples below THRESHOLD are flagged

    Examples:
      nlex robustness --input soc-Epinions1.txt --method snowball --size 500 --seed 0
      nlex robustness --input Wiki-Vote.txt --method node --size 500 --seed 1 --metrics closeness
    """
    metrics = MetricName.parse_list(metric_names)
    sampler = _sampler(method, size, seed, on_exhaustion, count)
    params = click.get_current_context().params
    with CommandRun(
        "robustness",
        params,
        out_dir,
        config_path,
        seed,
        max_workers=workers,
        correlation_threshold=threshold,
    ) as run:
        loaded = run.load(input_path, format_tag, lcc, name)
        sample_run, outcome = run.manager.robustness(
            loaded, sampler, count, metrics, run.out, threshold
        )
        if not outcome.reports:
            raise next(iter(outcome.failures.values()))
        run.details["sample_run"] = sample_run.manifest()
        run.details["failures"] = {m.value: e.message for m, e in outcome.failures.items()}

    click.echo(format_robustness(list(outcome.reports.values())))
    for sample_index, metric in outcome.flagged_pairs():
        click.echo(f"flagged: sample {sample_index} {metric.value}")
    for metric, error in outcome.failures.items():
        show_warning(f"{metric.value} skipped: {error.message}")
    show_success("Robustness report written", str(out_dir), _relative(run.out))


# ============================================================================
# Cross-dataset report
# ============================================================================


@cli.command("report")
@click.option(
    "--input",
    "inputs",
    type=click.Path(dir_okay=False, path_type=Path),
    multiple=True,
    help="Graph file; repeat for each dataset",
)
@click.option("--name", "names", multiple=True, help="Dataset name per --input, in order")
@click.option(
    "--data-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Use every known dataset present in this directory",
)
@format_options
@sampling_options(required=False)
@click.option("--full", is_flag=True, help="Analyse whole graphs instead of one sample each")
@click.option(
    "--ccg-mode",
    type=click.Choice([m.value for m in CCGMode]),
    default=None,
    help="Global clustering definition",
)
@common_options
@handle_errors("report")
def report_cmd(
    inputs: Sequence[Path],
    names: Sequence[str],
    data_dir: Optional[Path],
    format_tag: Optional[str],
    lcc: bool,
    method: Optional[str],
    size: Optional[int],
    seed: Optional[int],
    on_exhaustion: str,
    full: bool,
    ccg_mode: Optional[str],
    config_path: Optional[Path],
    workers: Optional[int],
    out_dir: Path,
) -> None:
    """
    Compare datasets: combined statistics table plus trimmed binned
    distributions of all six metrics, one sample per dataset (or --full)

    Examples:
      nlex report --data-dir data --method snowball --size 500 --seed 7
      nlex report --input a.txt --input b.net --name twitter --name author --full
    """
    entries: List[Dict[str, Any]] = []
    if names and len(names) != len(inputs):
        raise ValidationError(f"{len(names)} --name values for {len(inputs)} --input files")
    for i, path in enumerate(inputs):
        entries.append(
            {"path": path, "name": names[i] if names else None, "format": format_tag, "lcc": lcc}
        )
    if data_dir is not None:
        for dataset, path in dataset_registry.locate(data_dir).items():
            info = dataset_registry.get_dataset(dataset)
            entries.append(
                {"path": path, "name": dataset, "format": info.format.value, "lcc": lcc or info.lcc}
            )
    validate_input_files([e["path"] for e in entries])

    sampler = None
    if not full:
        if method is None or size is None or seed is None:
            raise ValidationError(
                "report needs --method, --size and --seed unless --full is given"
            )
        sampler = _sampler(method, size, seed, on_exhaustion, 1)

    params = click.get_current_context().params
    with CommandRun(
        "report", params, out_dir, config_path, seed, max_workers=workers, ccg_mode=ccg_mode
    ) as run:
        progress = SimpleProgress("Loading", total=len(entries))
        loaded = []
        for i, entry in enumerate(entries, start=1):
            progress.update(i, str(entry["path"]))
            loaded.append(run.load(entry["path"], entry["format"], entry["lcc"], entry["name"]))
        progress.complete(f"Loaded {len(loaded)} datasets")
        result = run.manager.report(loaded, run.out, sampler)
        run.details["datasets"] = [d.name for d in loaded]

    click.echo(format_stats_table(result.stats))
    show_success("Report written", str(out_dir), _relative(run.out))


# ============================================================================
# Replay
# ============================================================================


@cli.command("replay")
@click.argument("manifest_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    "--out-dir",
    type=click.Path(file_okay=False, path_type=Path),
    required=True,
    help="Directory for the replayed outputs",
)
@click.pass_context
@handle_errors("replay")
def replay_cmd(ctx: click.Context, manifest_path: Path, out_dir: Path) -> None:
    """
    Re-run a recorded command and check its data outputs are byte-identical

    Examples:
      nlex replay netlex_out/manifest.json --out-dir replay_out
    """
    if not manifest_path.is_file():
        raise InputOutputError(f"manifest not found: {manifest_path}")
    manifest = RunManifest(**read_json_file(manifest_path))
    if manifest.command not in REPLAYABLE_COMMANDS:
        raise ValidationError(f"command '{manifest.command}' cannot be replayed")
    if out_dir.resolve() == manifest_path.parent.resolve():
        raise ValidationError("replay needs an output directory other than the recorded one")

    changed = []
    for record in manifest.inputs:
        path = Path(record.path)
        if not path.is_file() or file_record(path).sha256 != record.sha256:
            changed.append(record.path)
    if changed:
        raise ReproducibilityError(f"inputs differ from the recording: {', '.join(changed)}", changed)

    command = cli.commands[manifest.command]
    with tempfile.TemporaryDirectory(prefix="netlex_replay_") as tmp:
        config_file = Path(tmp) / "config.json"
        config_file.write_text(json.dumps(manifest.config), encoding="utf-8")
        params = dict(manifest.params, out_dir=str(out_dir), config_path=str(config_file))
        args = params_to_args(command, params)
        code = command.main(args=args, prog_name=manifest.command, standalone_mode=False, obj=ctx.obj)
    if code:
        raise click.exceptions.Exit(code)

    replayed = RunManifest(**read_json_file(out_dir / MANIFEST_NAME)).data_outputs()
    recorded = manifest.data_outputs()
    mismatched = sorted(
        path for path in set(recorded) | set(replayed) if recorded.get(path) != replayed.get(path)
    )
    if mismatched:
        raise ReproducibilityError(f"outputs differ: {', '.join(mismatched)}", mismatched)
    show_success(f"Replay of '{manifest.command}' reproduced {len(recorded)} outputs", str(out_dir))


# ============================================================================
# Datasets
# ============================================================================


@cli.group()
def datasets() -> None:
    """Known datasets and checksum pinning (no downloads)"""


@datasets.command("list")
def datasets_list() -> None:
    """List known datasets with their sources and expected sizes"""
    for info in dataset_registry.DATASETS.values():
        size = f"{info.expected_nodes} nodes" if info.expected_nodes else "size unknown"
        if info.expected_edges:
            size += f", {info.expected_edges} edges"
        lcc = " (largest component)" if info.lcc else ""
        click.echo(f"{info.name:<10} {info.filename:<20} {info.format.value:<6} {size}{lcc}")
        click.echo(f"{'':<10} {info.url or info.notes}")


@datasets.command("pin")
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path), required=True)
@click.option(
    "--checksums",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("checksums.json"),
    show_default=True,
)
@handle_errors("datasets pin")
def datasets_pin(data_dir: Path, checksums: Path) -> None:
    """Record sha256 checksums of the datasets present in DATA_DIR"""
    pins = dataset_registry.pin_checksums(data_dir, checksums)
    for name, pin in pins.items():
        click.echo(f"{name:<10} {pin['sha256']}  {pin['file']}")
    show_success(f"Pinned {len(pins)} datasets", str(checksums))


@datasets.command("verify")
@click.option("--data-dir", type=click.Path(file_okay=False, path_type=Path), required=True)
@click.option(
    "--checksums",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("checksums.json"),
    show_default=True,
)
@handle_errors("datasets verify")
def datasets_verify(data_dir: Path, checksums: Path) -> None:
    """Check local dataset files against pinned checksums"""
    status = dataset_registry.verify_checksums(data_dir, checksums)
    for name, state in status.items():
        click.echo(f"{name:<10} {state}")
    bad = [name for name, state in status.items() if state != "ok"]
    if bad:
        raise InputOutputError(f"datasets not matching their pins: {', '.join(bad)}")
