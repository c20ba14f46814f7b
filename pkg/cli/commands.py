"""
Command-line front door

Subcommands: keystream, encrypt, decrypt, verify, bench, profiles (list, use, add).
Exit codes: 0 success, 1 verification/benchmark/I-O failure, 2 usage or parse error.
"""

import os
import sys
from enum import Enum
from pathlib import Path
from typing import List, Optional

import structlog
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from config.profile_manager import ProfileManager
from config.settings import PROJECT_ROOT, config_file_path, load_config, update_config_file, update_env_var
from core.bench import compare_reference, emit_csv, load_reference, run_benchmark, write_figures
from core.bench.reference import ReferenceDataError, host_findings
from core.ciphers.cipher_core import (
    BadIvLength,
    BadKeyLength,
    CipherError,
    CipherId,
    MAX_STREAM_BYTES,
    CipherInstance,
    PositionOverflow,
    UnknownCipherId,
    new_cipher,
)
from core.models.schemas import BenchConfig
from core.telemetry import configure_logging
from core.vectors import ParseError, load_vectors_file, verify as verify_records

logger = structlog.get_logger(__name__)

CHUNK_SIZE = 64 * 1024

app = typer.Typer(
    help="eSTREAM software-portfolio stream ciphers: keystream, encryption, known-answer tests, benchmarks.",
    add_completion=False,
    no_args_is_help=True,
)


class OutputFormat(str, Enum):
    HEX = 'hex'
    RAW = 'raw'


# ============================================================================
# Argument parsing helpers
# ============================================================================

def _parse_hex(value: str) -> bytes:
    try:
        return bytes.fromhex(value)
    except ValueError:
        raise typer.BadParameter(f"not an even-length hex string: {value!r}")


def _parse_cipher(value: str) -> CipherId:
    try:
        return CipherId.parse(value)
    except UnknownCipherId as e:
        raise typer.BadParameter(str(e))


def _parse_int_list(value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(',') if part.strip()]
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated integers, got {value!r}")


def _parse_cipher_list(value: Optional[str]) -> Optional[List[CipherId]]:
    if value is None:
        return None
    try:
        return [CipherId.parse(part) for part in value.split(',') if part.strip()]
    except UnknownCipherId as e:
        raise typer.BadParameter(str(e))


def _open_cipher(cipher: CipherId, key: bytes, iv: bytes) -> CipherInstance:
    try:
        return new_cipher(cipher, key, iv)
    except BadKeyLength as e:
        raise typer.BadParameter(str(e), param_hint="'--key'")
    except BadIvLength as e:
        raise typer.BadParameter(str(e), param_hint="'--iv'")


def _fail(message: str, code: int = 1) -> typer.Exit:
    typer.echo(f"❌ {message}", err=True)
    return typer.Exit(code)


CipherOption = typer.Option(..., '--cipher', '-c', callback=_parse_cipher,
                            help="SALSA20_12, SALSA20_8, SALSA20_20, RABBIT, HC128 or SOSEMANUK")
KeyOption = typer.Option(..., '--key', '-k', callback=_parse_hex, help="Key as hex")
IvOption = typer.Option(..., '--iv', callback=_parse_hex, help="IV as hex")


@app.callback()
def main(verbose: bool = typer.Option(False, '--verbose', '-v', help="Debug logging on stderr")):
    config = load_config()
    configure_logging('DEBUG' if verbose else config['log_level'], config.get('log_file'))


# ============================================================================
# keystream / encrypt / decrypt
# ============================================================================

@app.command()
def keystream(
    cipher: str = CipherOption,
    key: str = KeyOption,
    iv: str = IvOption,
    length: int = typer.Option(64, '--length', '-n', min=0, help="Bytes to emit"),
    offset: int = typer.Option(0, '--offset', min=0, help="Stream offset of the first byte"),
    fmt: OutputFormat = typer.Option(OutputFormat.HEX, '--format', help="hex (default) or raw"),
):
    """Emit keystream bytes [offset, offset+length)"""
    if offset + length > MAX_STREAM_BYTES:
        raise typer.BadParameter(
            f"offset {offset} + length {length} exceeds the stream limit {MAX_STREAM_BYTES}",
            param_hint="'--offset' / '--length'",
        )
    instance = _open_cipher(cipher, key, iv)
    try:
        instance.skip_to(offset)
        data = instance.keystream(length)
    except PositionOverflow as e:
        raise typer.BadParameter(str(e), param_hint="'--offset' / '--length'")
    except CipherError as e:
        raise _fail(str(e))

    if fmt == OutputFormat.HEX:
        typer.echo(data.hex())
    else:
        out = typer.get_binary_stream('stdout')
        out.write(data)
        out.flush()


def _transform(cipher: CipherId, key: bytes, iv: bytes, input_path: Path, output_path: Path) -> None:
    # Opening the output for writing would truncate the input before it is read
    if output_path.exists() and os.path.samefile(input_path, output_path):
        raise typer.BadParameter(
            f"{output_path} is the input file; write to a different path",
            param_hint="'--output'",
        )
    instance = _open_cipher(cipher, key, iv)
    total = 0
    try:
        src = input_path.open('rb')
    except OSError as e:
        raise _fail(f"{input_path}: {e.strerror}")
    with src:
        try:
            with output_path.open('wb') as dst:
                while True:
                    chunk = src.read(CHUNK_SIZE)
                    if not chunk:
                        break
                    dst.write(instance.apply(chunk))
                    total += len(chunk)
        except OSError as e:
            raise _fail(f"{e.filename or output_path}: {e.strerror}")
    logger.info(f"✅ {cipher.display_name}: {total} bytes -> {output_path}")


InputOption = typer.Option(..., '--input', '-i', exists=True, dir_okay=False, readable=True,
                           help="File to read")
OutputOption = typer.Option(..., '--output', '-o', dir_okay=False, help="File to write")


@app.command()
def encrypt(
    cipher: str = CipherOption,
    key: str = KeyOption,
    iv: str = IvOption,
    input_path: Path = InputOption,
    output_path: Path = OutputOption,
):
    """XOR a file with the keystream from offset 0"""
    _transform(cipher, key, iv, input_path, output_path)


@app.command()
def decrypt(
    cipher: str = CipherOption,
    key: str = KeyOption,
    iv: str = IvOption,
    input_path: Path = InputOption,
    output_path: Path = OutputOption,
):
    """Inverse of encrypt (the same transform)"""
    _transform(cipher, key, iv, input_path, output_path)


# ============================================================================
# verify
# ============================================================================

@app.command()
def verify(
    vectors_path: Optional[Path] = typer.Argument(None, help="Vector file (default: shipped corpus)"),
    workers: int = typer.Option(1, '--workers', '-w', min=1, help="Records checked in parallel"),
):
    """Run a known-answer vector file; exit 0 iff every check passes"""
    path = vectors_path or Path(load_config()['vectors_path'])
    if not path.is_absolute() and not path.exists():
        path = PROJECT_ROOT / path
    try:
        records = load_vectors_file(path)
    except ParseError as e:
        raise _fail(f"{path}: {e}", code=2)
    except OSError as e:
        raise _fail(f"{path}: {e.strerror}", code=2)

    report = verify_records(records, workers=workers)

    console = Console()
    if report.failures:
        table = Table(title="Failures")
        table.add_column('record', justify='right')
        table.add_column('cipher')
        table.add_column('check', justify='right')
        table.add_column('offset', justify='right')
        table.add_column('detail')
        for failure in report.failures:
            table.add_row(
                str(failure.record_index),
                failure.cipher.value if failure.cipher else '?',
                '-' if failure.check_index is None else str(failure.check_index),
                '-' if failure.offset is None else str(failure.offset),
                failure.describe(),
            )
        console.print(table)
    console.print(report.summary(), highlight=False)
    raise typer.Exit(0 if report.ok else 1)


# ============================================================================
# bench
# ============================================================================

def _profile_manager(config: dict) -> ProfileManager:
    try:
        return ProfileManager(custom_profiles=config.get('profiles') or {})
    except (TypeError, ValueError) as e:
        raise _fail(f"bad custom profile in {config_file_path()}: {e}", 2)


def resolve_bench_config(
    profile: Optional[str] = None,
    **overrides,
) -> BenchConfig:
    """
    Merge bench parameters: CLI flag > profile > environment > config file > defaults

    A profile applies only when one is selected (``--profile``, STREAMLAB_PROFILE
    or ``"profile"`` in config.json).
    """
    config = load_config()
    values = dict(config['bench'])
    profile = profile or config['profile']
    if profile:
        try:
            values.update(_profile_manager(config).set_profile(profile))
        except ValueError as e:
            raise typer.BadParameter(str(e), param_hint="'--profile'")
    try:
        return BenchConfig.from_profile(values, **overrides)
    except ValidationError as e:
        raise typer.BadParameter(
            '; '.join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
        )


@app.command()
def bench(
    lengths: Optional[str] = typer.Option(None, '--lengths', help="Comma-separated message lengths in bytes"),
    iterations: Optional[int] = typer.Option(None, '--iterations', min=1, help="Timed executions per cell"),
    warmup: Optional[int] = typer.Option(None, '--warmup', min=0, help="Untimed executions per cell"),
    ciphers: Optional[str] = typer.Option(None, '--ciphers', help="Comma-separated cipher ids"),
    include_setup: Optional[bool] = typer.Option(
        None, '--include-setup/--no-include-setup', help="Time key/IV setup with every sample"),
    output: Optional[Path] = typer.Option(None, '--output', '-o', dir_okay=False, help="CSV path (default stdout)"),
    compare: bool = typer.Option(False, '--compare-reference', help="Print the published handset comparison"),
    seed: Optional[int] = typer.Option(None, '--seed', help="Message/key seed"),
    profile: Optional[str] = typer.Option(None, '--profile', '-p', help="full, desk, smoke or a custom profile"),
    plot: Optional[Path] = typer.Option(None, '--plot', dir_okay=False, help="Write plotly HTML charts"),
):
    """Time encryption per (cipher, message length) and write a CSV report"""
    config = resolve_bench_config(
        profile,
        lengths=_parse_int_list(lengths),
        iterations=iterations,
        warmup_iterations=warmup,
        ciphers=_parse_cipher_list(ciphers),
        include_setup=include_setup,
        seed=seed,
    )
    typer.echo(f"seed: {config.seed}", err=True)

    reference = None
    if compare or plot:
        try:
            reference = load_reference(load_config()['reference_dir'])
        except ReferenceDataError as e:
            raise _fail(str(e))

    try:
        report = run_benchmark(config)
    except CipherError as e:
        raise _fail(f"benchmark aborted: {e}")

    text = emit_csv(report)
    if output is None:
        typer.echo(text, nl=False)
    else:
        try:
            output.parent.mkdir(parents=True, exist_ok=True)
            output.write_text(text, encoding='utf-8')
        except OSError as e:
            raise _fail(f"{output}: {e.strerror}")
        logger.info(f"📊 Report written to {output}")

    if compare:
        typer.echo(compare_reference(report, reference))
    else:
        for line in host_findings(report):
            logger.info(f"📊 {line}")

    if plot is not None:
        try:
            write_figures(report, plot, reference)
        except OSError as e:
            raise _fail(f"{plot}: {e.strerror}")
        logger.info(f"📊 Charts written to {plot}")


# ============================================================================
# profiles
# ============================================================================

profiles_app = typer.Typer(help="List, select and add bench profiles", no_args_is_help=True)
app.add_typer(profiles_app, name='profiles')


@profiles_app.command('list')
def profiles_list():
    """Show every profile; the active one is starred"""
    config = load_config()
    manager = _profile_manager(config)

    table = Table(title=f"Bench profiles ({config_file_path()})")
    table.add_column("", width=1)
    table.add_column("Profile", style="cyan")
    table.add_column("Iterations", justify="right")
    table.add_column("Warm-up", justify="right")
    table.add_column("Setup")
    table.add_column("Description")
    for name, description in manager.list_profiles().items():
        profile = manager.get_profile(name)
        table.add_row(
            "*" if name == config['profile'] else "",
            name,
            str(profile['iterations']),
            str(profile['warmup_iterations']),
            "yes" if profile['include_setup'] else "no",
            description,
        )
    Console(width=120).print(table)
    if not config['profile']:
        typer.echo("no active profile: bench uses the config file's bench block")


@profiles_app.command('use')
def profiles_use(
    name: str = typer.Argument(..., help="Profile to make the default for bench"),
    env_file: Optional[Path] = typer.Option(
        None, '--env-file', dir_okay=False, help="Also set STREAMLAB_PROFILE in this existing .env file"),
):
    """Make a profile the default for bench runs"""
    config = load_config()
    try:
        profile = _profile_manager(config).set_profile(name)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="'NAME'")

    try:
        saved = update_config_file({'profile': name})
    except ValueError as e:
        raise _fail(f"{config_file_path()}: {e}")
    if not saved:
        raise _fail(f"could not write {config_file_path()}")
    if env_file is not None and not update_env_var('STREAMLAB_PROFILE', name, str(env_file)):
        raise _fail(f"could not set STREAMLAB_PROFILE in {env_file}")
    typer.echo(f"✅ bench profile: {name} ({profile['iterations']} iterations)")


@profiles_app.command('add')
def profiles_add(
    name: str = typer.Argument(..., help="New profile name"),
    iterations: int = typer.Option(..., '--iterations', help="Timed executions per cell"),
    warmup: int = typer.Option(..., '--warmup', help="Untimed executions per cell"),
    include_setup: bool = typer.Option(True, '--include-setup/--no-include-setup'),
    lengths: Optional[str] = typer.Option(None, '--lengths', help="Comma-separated message lengths"),
    description: Optional[str] = typer.Option(None, '--description'),
):
    """Save a custom profile to the config file"""
    config = load_config()
    manager = _profile_manager(config)
    if name in manager.profiles:
        raise typer.BadParameter(f"profile '{name}' already exists", param_hint="'NAME'")

    values = {'iterations': iterations, 'warmup_iterations': warmup, 'include_setup': include_setup}
    parsed = _parse_int_list(lengths)
    if parsed is not None:
        values['lengths'] = parsed
    if description:
        values['description'] = description
    try:
        stored = manager.create_custom_profile(name, values)
    except ValueError as e:
        raise typer.BadParameter(str(e))

    try:
        saved = update_config_file({'profiles': {name: stored}})
    except ValueError as e:
        raise _fail(f"{config_file_path()}: {e}")
    if not saved:
        raise _fail(f"could not write {config_file_path()}")
    typer.echo(f"✅ profile '{name}' saved to {config_file_path()}")


def run() -> None:
    app(prog_name='streamlab')


if __name__ == '__main__':
    sys.exit(run())
