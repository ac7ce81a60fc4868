"""Command-line front end.

Subcommands: m, factor, kmax, kbar, histogram, worst, verify, bounds.
Exit status is 0 on success, 1 when a verification ran and failed (the
counterexamples are printed), 2 on usage errors.  Output is byte-stable
for a fixed configuration and seed regardless of the thread count.

The shared options (--format, --threads, --cache-dir, --seed) are
accepted both before and after the subcommand; the subcommand position
wins, and PALIN_CACHE_DIR overrides any --cache-dir.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

import click

from . import distribution, extremal, lemmas
from .asymptotics import bounds_report
from .cache import CacheEntry, ResultCache
from .distribution import AverageRow, MHistogram
from .extremal import ExtremalRow
from .factorization import min_factorization
from .words import WordError, orbit, parse_word

__all__ = ["RunConfig", "cli", "dispatch", "main"]

FORMATS = ("table", "csv", "json")

# Enumerations beyond this length take minutes and gigabytes; ask first.
LONG_RUN_THRESHOLD = 26


@dataclass
class RunConfig:
    threads: int = 1
    format: str = "table"
    cache_dir: str | None = None
    seed: int = 42

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError(f"threads must be positive, got {self.threads}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")

    @property
    def cache(self) -> ResultCache:
        return ResultCache(self.cache_dir)


def _common_options(fn):
    fn = click.option("--seed", type=int, default=None, help="Seed for randomized checks.")(fn)
    fn = click.option(
        "--cache-dir",
        type=click.Path(file_okay=False),
        default=None,
        help="Directory for persisted rows (PALIN_CACHE_DIR overrides).",
    )(fn)
    fn = click.option(
        "--format", "-f", "fmt", type=click.Choice(FORMATS), default=None, help="Output format."
    )(fn)
    fn = click.option("--threads", type=int, default=None, help="Worker count.")(fn)
    return fn


def _resolve(
    base: RunConfig,
    threads: int | None,
    fmt: str | None,
    cache_dir: str | None,
    seed: int | None,
) -> RunConfig:
    merged_cache = os.environ.get("PALIN_CACHE_DIR") or (cache_dir if cache_dir is not None else base.cache_dir)
    try:
        return RunConfig(
            threads=threads if threads is not None else base.threads,
            format=fmt if fmt is not None else base.format,
            cache_dir=merged_cache,
            seed=seed if seed is not None else base.seed,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _echo_json(doc: object) -> None:
    click.echo(json.dumps(doc, indent=2, sort_keys=True))


def _parse_word_arg(text: str):
    try:
        return parse_word(text)
    except WordError as exc:
        raise click.UsageError(str(exc)) from exc


def _guard_long(n: int, allow_long: bool) -> None:
    if n > LONG_RUN_THRESHOLD and not allow_long:
        raise click.UsageError(
            f"lengths above {LONG_RUN_THRESHOLD} are long-running; pass --allow-long to proceed"
        )


def _lib_call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
@click.option("--threads", type=int, default=None, help="Worker count (default: machine parallelism).")
@click.option("--format", "-f", "fmt", type=click.Choice(FORMATS), default="table", help="Output format.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None,
              help="Directory for persisted rows (PALIN_CACHE_DIR overrides).")
@click.option("--seed", type=int, default=42, help="Seed for randomized checks.")
@click.pass_context
def cli(ctx: click.Context, threads: int | None, fmt: str, cache_dir: str | None, seed: int) -> None:
    """Minimal palindromic factorizations: worst cases, averages, bounds."""
    if threads is None:
        threads = os.cpu_count() or 1
    try:
        ctx.obj = RunConfig(threads=threads, format=fmt, cache_dir=cache_dir, seed=seed)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


@cli.command("m")
@click.argument("word")
@_common_options
@click.pass_obj
def m_command(base: RunConfig, word: str, threads, fmt, cache_dir, seed) -> None:
    """Print the asymmetry measure m(WORD)."""
    config = _resolve(base, threads, fmt, cache_dir, seed)
    fact = _lib_call(min_factorization, _parse_word_arg(word))
    if config.format == "json":
        _echo_json({"word": fact.word.text, "m": fact.m})
    elif config.format == "csv":
        click.echo("word,m")
        click.echo(f"{fact.word.text},{fact.m}")
    else:
        click.echo(str(fact.m))


@cli.command("factor")
@click.argument("word")
@_common_options
@click.pass_obj
def factor_command(base: RunConfig, word: str, threads, fmt, cache_dir, seed) -> None:
    """Print a minimal palindromic factorization of WORD."""
    config = _resolve(base, threads, fmt, cache_dir, seed)
    fact = _lib_call(min_factorization, _parse_word_arg(word))
    if config.format == "json":
        _echo_json(
            {
                "word": fact.word.text,
                "m": fact.m,
                "cuts": list(fact.cuts),
                "blocks": list(fact.blocks()),
            }
        )
    elif config.format == "csv":
        click.echo("word,m,factorization")
        click.echo(f"{fact.word.text},{fact.m},{fact}")
    else:
        click.echo(str(fact))


def _kmax_rows_cached(config: RunConfig, n_max: int) -> list[ExtremalRow]:
    cache = config.cache
    cached = [cache.load("kmax", n) for n in range(1, n_max + 1)]
    if all(payload is not None for payload in cached):
        return [
            ExtremalRow(
                n=payload["n"],
                k=payload["K"],
                maximizer_count=payload["maximizer_count"],
                sample_maximizers=tuple(payload["sample_maximizers"]),
            )
            for payload in cached  # type: ignore[index]
        ]
    rows = _lib_call(extremal.k_max_rows, n_max, config.threads)
    for row in rows:
        cache.store(
            CacheEntry(
                kind="kmax",
                n=row.n,
                payload={
                    "n": row.n,
                    "K": row.k,
                    "maximizer_count": row.maximizer_count,
                    "sample_maximizers": list(row.sample_maximizers),
                },
            )
        )
    return rows


def _histograms_cached(config: RunConfig, n_max: int) -> list[MHistogram]:
    cache = config.cache
    cached = [cache.load("histogram", n) for n in range(1, n_max + 1)]
    if all(payload is not None for payload in cached):
        return [
            MHistogram(
                n=payload["n"],
                counts={int(k): v for k, v in sorted(payload["counts"].items(), key=lambda kv: int(kv[0]))},
            )
            for payload in cached  # type: ignore[index]
        ]
    rows = _lib_call(distribution.histogram_rows, n_max, config.threads)
    for row in rows:
        cache.store(
            CacheEntry(
                kind="histogram",
                n=row.n,
                payload={"n": row.n, "counts": {str(k): v for k, v in row.counts.items()}},
            )
        )
    return rows


def _orbit_json(representative: str) -> dict:
    words = [w.text for w in orbit(parse_word(representative))]
    return {"representative": representative, "size": len(words), "words": words}


@cli.command("kmax")
@click.option("--max-n", type=int, required=True, help="Compute K(n) for every n up to this length.")
@click.option("--allow-long", is_flag=True, help="Permit lengths above 26.")
@_common_options
@click.pass_obj
def kmax_command(base: RunConfig, max_n: int, allow_long: bool, threads, fmt, cache_dir, seed) -> None:
    """Exact worst-case table K(1)..K(MAX_N) by full enumeration."""
    config = _resolve(base, threads, fmt, cache_dir, seed)
    _guard_long(max_n, allow_long)
    rows = _kmax_rows_cached(config, max_n)
    if config.format == "csv":
        click.echo("n,K,maximizer_count")
        for row in rows:
            click.echo(f"{row.n},{row.k},{row.maximizer_count}")
    elif config.format == "json":
        _echo_json(
            [
                {
                    "n": row.n,
                    "K": row.k,
                    "maximizer_count": row.maximizer_count,
                    "orbits": [_orbit_json(rep) for rep in row.sample_maximizers],
                }
                for row in rows
            ]
        )
    else:
        click.echo(f"{'n':>3} {'K':>3} {'maximizers':>11}  sample")
        for row in rows:
            sample = row.sample_maximizers[0] if row.sample_maximizers else ""
            click.echo(f"{row.n:>3} {row.k:>3} {row.maximizer_count:>11}  {sample}")


@cli.command("kbar")
@click.option("--max-n", type=int, required=True, help="Exact averages for every n up to this length.")
@click.option("--allow-long", is_flag=True, help="Permit lengths above 26.")
@_common_options
@click.pass_obj
def kbar_command(base: RunConfig, max_n: int, allow_long: bool, threads, fmt, cache_dir, seed) -> None:
    """Exact average table kbar(1)..kbar(MAX_N)."""
    config = _resolve(base, threads, fmt, cache_dir, seed)
    _guard_long(max_n, allow_long)
    hists = _histograms_cached(config, max_n)
    rows = [AverageRow(n=h.n, s=h.s) for h in hists]
    if config.format == "csv":
        click.echo("n,S,kbar_decimal,kbar_num,kbar_den_pow2")
        for row in rows:
            click.echo(f"{row.n},{row.s},{row.kbar_text},{row.kbar_num},{row.kbar_den_pow2}")
    elif config.format == "json":
        _echo_json(
            [
                {
                    "n": row.n,
                    "S": row.s,
                    "kbar_decimal": row.kbar_text,
                    "kbar_num": row.kbar_num,
                    "kbar_den_pow2": row.kbar_den_pow2,
                    "ratio_decimal": row.ratio_text,
                }
                for row in rows
            ]
        )
    else:
        click.echo(f"{'n':>3} {'S':>12} {'kbar':>8} {'kbar/n':>8}")
        for row in rows:
            click.echo(f"{row.n:>3} {row.s:>12} {row.kbar_text:>8} {row.ratio_text:>8}")


@cli.command("histogram")
@click.option("--n", "n", type=int, required=True, help="Word length.")
@click.option("--allow-long", is_flag=True, help="Permit lengths above 26.")
@_common_options
@click.pass_obj
def histogram_command(base: RunConfig, n: int, allow_long: bool, threads, fmt, cache_dir, seed) -> None:
    """Exact counts x_k of words of length N with m = k."""
    config = _resolve(base, threads, fmt, cache_dir, seed)
    _guard_long(n, allow_long)
    hist = _histograms_cached(config, n)[-1]
    if config.format == "csv":
        click.echo("n,k,x_k")
        for k, count in sorted(hist.counts.items()):
            click.echo(f"{hist.n},{k},{count}")
    elif config.format == "json":
        _echo_json({"n": hist.n, "counts": {str(k): v for k, v in sorted(hist.counts.items())}})
    else:
        click.echo(f"{'k':>3} {'x_k':>12}")
        for k, count in sorted(hist.counts.items()):
            click.echo(f"{k:>3} {count:>12}")


@cli.command("worst")
@click.option("--n", "n", type=int, required=True, help="Word length.")
@click.option("--allow-long", is_flag=True, help="Permit lengths above 26.")
@_common_options
@click.pass_obj
def worst_command(base: RunConfig, n: int, allow_long: bool, threads, fmt, cache_dir, seed) -> None:
    """All words attaining K(N), grouped into symmetry orbits."""
    config = _resolve(base, threads, fmt, cache_dir, seed)
    _guard_long(n, allow_long)
    orbits = _lib_call(extremal.worst_words, n, config.threads)
    k = _lib_call(extremal.k_max, n, config.threads).k
    if config.format == "csv":
        click.echo("n,representative,orbit_size")
        for orb in orbits:
            click.echo(f"{n},{orb.representative},{orb.size}")
    elif config.format == "json":
        _echo_json(
            {
                "n": n,
                "K": k,
                "orbits": [
                    {"representative": orb.representative, "size": orb.size, "words": list(orb.words)}
                    for orb in orbits
                ],
            }
        )
    else:
        click.echo(f"K({n}) = {k}, {len(orbits)} orbit(s)")
        for orb in orbits:
            click.echo(f"  {orb.representative}  (orbit size {orb.size}: {', '.join(orb.words)})")


VERIFY_TARGETS = (
    "all",
    "lemma1",
    "lemma2",
    "lemma3",
    "lemma4",
    "lemma7",
    "lemma8",
    "lemma9",
    "ksum",
    "theorem1",
    "subadditivity",
    "counting",
)

_COUNTEREXAMPLE_PRINT_LIMIT = 10


def _verify_reports(config: RunConfig, target: str, max_n: int, trials: int) -> list[dict]:
    reports: list[dict] = []

    def add(lemma_id: str, params: dict, passed: bool, counterexamples: list) -> None:
        reports.append(
            {
                "lemma": lemma_id,
                "params": params,
                "verdict": "pass" if passed else "fail",
                "counterexamples": counterexamples,
            }
        )

    lemma_runs = {
        "lemma1": lambda: lemmas.verify_lemma1(8),
        "lemma2": lambda: lemmas.verify_case_lemma(2),
        "lemma3": lambda: lemmas.verify_case_lemma(3),
        "lemma4": lambda: lemmas.verify_case_lemma(4),
        "lemma7": lambda: lemmas.verify_lemma7(10),
        "lemma8": lambda: lemmas.verify_lemma8(6),
        "lemma9": lambda: lemmas.verify_lemma9(5),
        "ksum": lambda: lemmas.ksum_property(trials, config.seed),
    }
    for name, run in lemma_runs.items():
        if target in (name, "all"):
            rep = run()
            params = dict(rep.params)
            params["cases"] = rep.cases
            add(rep.lemma_id, params, rep.passed, list(rep.counterexamples))
    if target in ("theorem1", "all"):
        rep = extremal.verify_theorem1(max_n, config.threads)
        add(
            "theorem1",
            {"n_max": max_n, "cases": rep.checked},
            rep.ok,
            [{"n": n, "enumerated": e, "formula": f} for n, e, f in rep.mismatches],
        )
    if target in ("subadditivity", "all"):
        rep = distribution.subadditivity_check(max(2, max_n), config.threads)
        add(
            "subadditivity",
            {
                "n_max": rep.n_max,
                "cases": rep.pairs_checked,
                "min_ratio_n": rep.min_ratio_n,
                "min_ratio": f"{rep.min_ratio.numerator}/{rep.min_ratio.denominator}",
            },
            rep.ok,
            [{"i": i, "j": j} for i, j in rep.violations],
        )
    if target in ("counting", "all"):
        top = min(16, max_n)
        bad = []
        cases = 0
        for n in range(9, top + 1):
            rep = distribution.counting_bound_check(n, config.threads)
            cases += len(rep.entries)
            bad.extend({"n": n, "k": e.k} for e in rep.entries if not e.holds)
        add("counting", {"n_range": f"9..{top}", "cases": cases}, not bad, bad)
    return reports


@cli.command("verify")
@click.argument("target", type=click.Choice(VERIFY_TARGETS))
@click.option("--max-n", type=int, default=20, help="Length ceiling for the table-driven checks.")
@click.option("--trials", type=int, default=10_000, help="Trials for the randomized tuple check.")
@_common_options
@click.pass_obj
def verify_command(base: RunConfig, target: str, max_n: int, trials: int, threads, fmt, cache_dir, seed) -> int:
    """Replay the machine-checkable claims; exit 1 on any failure."""
    config = _resolve(base, threads, fmt, cache_dir, seed)
    if max_n < 1:
        raise click.UsageError(f"--max-n must be positive, got {max_n}")
    reports = _verify_reports(config, target, max_n, trials)
    failed = [rep for rep in reports if rep["verdict"] != "pass"]
    if config.format == "json":
        _echo_json(reports)
    else:
        for rep in reports:
            extras = {k: v for k, v in rep["params"].items() if k != "cases"}
            suffix = f" {extras}" if extras else ""
            click.echo(f"{rep['lemma']}: {rep['verdict'].upper()} (cases={rep['params'].get('cases')}){suffix}")
            for bad in rep["counterexamples"][:_COUNTEREXAMPLE_PRINT_LIMIT]:
                click.echo(f"  counterexample: {bad}")
            remaining = len(rep["counterexamples"]) - _COUNTEREXAMPLE_PRINT_LIMIT
            if remaining > 0:
                click.echo(f"  ... and {remaining} more")
    return 1 if failed else 0


@cli.command("bounds")
@click.option("--tolerance", type=float, default=1e-10, help="Bisection tolerance for the root of f.")
@_common_options
@click.pass_obj
def bounds_command(base: RunConfig, tolerance: float, threads, fmt, cache_dir, seed) -> None:
    """Both bound constants for the limit of kbar(n)/n."""
    config = _resolve(base, threads, fmt, cache_dir, seed)
    hists = _histograms_cached(config, 21)
    rows = [AverageRow(n=h.n, s=h.s) for h in hists]
    report = _lib_call(bounds_report, rows, tolerance)
    den = report.upper_bound.denominator
    exp2 = (den & -den).bit_length() - 1
    odd = den >> exp2
    den_text = f"{odd}*2^{exp2}" if odd > 1 and exp2 else (f"2^{exp2}" if exp2 else str(odd))
    if config.format == "json":
        _echo_json(
            {
                "theta_prime": report.theta_prime,
                "lower": report.g_at_theta_prime,
                "upper_exact": {"num": report.upper_bound.numerator, "den": den_text},
                "upper": report.upper_float,
                "g_prime_roots": list(report.g_prime_roots),
                "f0": report.f0,
                "tolerance": report.tolerance,
            }
        )
    elif config.format == "csv":
        click.echo("quantity,value")
        click.echo(f"theta_prime,{report.theta_prime!r}")
        click.echo(f"lower,{report.g_at_theta_prime!r}")
        click.echo(f"upper,{report.upper_float!r}")
        click.echo(f"upper_exact,{report.upper_bound.numerator}/{den_text}")
        click.echo(f"g_prime_root_1,{report.g_prime_roots[0]!r}")
        click.echo(f"g_prime_root_2,{report.g_prime_roots[1]!r}")
    else:
        click.echo(f"theta'        = {report.theta_prime:.10f}")
        click.echo(f"lower bound   = {report.lower_text}  (g(theta'))")
        click.echo(f"upper bound   = {report.upper_text}  (= {report.upper_bound.numerator}/{den_text} exactly)")
        click.echo(f"g' roots      = {report.g_prime_roots[0]:.4f}, {report.g_prime_roots[1]:.3f}")


def dispatch(argv: Sequence[str]) -> int:
    """Run one CLI invocation and return its exit status (0/1/2)."""
    try:
        result = cli.main(args=list(argv), prog_name="palfact", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
