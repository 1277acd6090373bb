"""Command-line front end: count, enumerate, table, sequence, verify, oeis."""

from __future__ import annotations

import csv
import io
import itertools
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from . import oeis as oeis_mod
from . import verify as verify_mod
from .core import COLUMNS, Problem, Row, format_assemblage, iter_populations
from .enumeration import DEFAULT_CAP, CapExceeded, _raw, enumerate_assemblages
from .formulas import count
from .sequences import sequence_id, sequence_terms

FORMATS = ("plain", "csv", "json-lines")
SUITE_NAMES = tuple(verify_mod.SUITES) + ("all",)

# suites that take the --max-m / --max-b scale flags
_SCALED = {"oracle", "quotients", "summations", "equalities"}


class UsageFailure(click.UsageError):
    """Reported with exit code 2."""


def _ints(value: str | None, name: str) -> tuple[int, ...] | None:
    if value is None:
        return None
    try:
        return tuple(int(x) for x in value.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageFailure(f"--{name} must be comma-separated integers, got {value!r}") from None


def _problem(row, col, m, b, alpha, mu) -> Problem:
    try:
        return Problem(row, col, m=m, b=b, alpha=_ints(alpha, "alpha"), mu=_ints(mu, "mu"))
    except ValueError as exc:
        raise UsageFailure(str(exc)) from None


def _emit(fmt: str, records: list[dict], plain) -> None:
    """Write records as json-lines, csv or plain text through one writer."""
    out = click.get_text_stream("stdout")
    if fmt == "json-lines":
        for r in records:
            out.write(json.dumps(r, sort_keys=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        keys = list(dict.fromkeys(k for r in records for k in r))
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        for r in records:
            out.write(plain(r) + "\n")
    out.flush()


def _problem_options(f):
    opts = [
        click.option("--row", required=True, type=click.Choice([r.value for r in Row], case_sensitive=False)),
        click.option("--col", "col", required=True, type=click.Choice(COLUMNS)),
        click.option("--m", type=int, default=None, help="Number of items."),
        click.option("--b", type=int, default=None, help="Number of batches."),
        click.option("--alpha", default=None, help="Population vector, e.g. 0,0,2,0,0."),
        click.option("--mu", default=None, help="Batch size sequence, e.g. 2,0,1."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


format_option = click.option("--format", "fmt", type=click.Choice(FORMATS), default="plain", show_default=True)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="artifact")
def main():
    """Exact counts and listings for the thirty-cell twelvefold grid."""


@main.command("count")
@_problem_options
@format_option
def cmd_count(row, col, m, b, alpha, mu, fmt):
    """Print the exact number of assemblages in one cell."""
    p = _problem(row, col, m, b, alpha, mu)
    _emit(fmt, [{"problem": p.describe(), "count": count(p)}], lambda r: str(r["count"]))


@main.command("enumerate")
@_problem_options
@click.option("--limit", type=int, default=None, help="Print at most this many assemblages.")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@format_option
def cmd_enumerate(row, col, m, b, alpha, mu, limit, cap, fmt):
    """List assemblages in canonical text form, one per line, then the total."""
    p = _problem(row, col, m, b, alpha, mu)
    if limit is not None and limit < 0:
        raise UsageFailure("--limit must be non-negative")
    total = count(p)
    if total > cap:
        if limit is None:
            raise CapExceeded(f"{p} has {total} assemblages, above the cap of {cap}; pass --limit")
        # too many to sort: emit the first ones in generation order
        items = [format_assemblage(x) for x in itertools.islice(_raw(p), limit)]
    else:
        items = [format_assemblage(x) for x in enumerate_assemblages(p, cap=cap)]
        if limit is not None:
            items = items[:limit]
    if fmt == "plain":
        out = click.get_text_stream("stdout")
        for t in items:
            out.write(t + "\n")
        out.write(f"# total {total}\n")
        out.flush()
        return
    records = [{"assemblage": t} for t in items]
    records.append({"problem": p.describe(), "count": total})
    _emit(fmt, records, str)


@main.command("table")
@click.option("--m", type=int, required=True)
@click.option("--b", type=int, required=True)
@click.option("--alpha", default=None, help="Show Column 0 counts for this population vector.")
@format_option
def cmd_table(m, b, alpha, fmt):
    """All thirty counts of Columns 0-4 at one (m, b).

    Column 0 shows how many population vectors fit (m, b) unless --alpha
    picks one, in which case it shows that vector's counts.
    """
    if m < 0 or b < 0:
        raise UsageFailure("m and b must be non-negative")
    a = _ints(alpha, "alpha")
    if a is not None:
        p0 = _problem("A", "0", m, b, alpha, None)
    n_alpha = sum(1 for _ in iter_populations(m, b=b))
    records = []
    for row in Row:
        cells = {"0": count(p0.with_row(row)) if a is not None else n_alpha}
        for col in ("1", "2", "3"):
            cells[col] = count(Problem(row, col, m, b))
        cells["4"] = count(Problem(row, "4", m))
        for col, v in cells.items():
            d = {"row": row.value, "column": col, "m": m}
            if col != "4":
                d["b"] = b
            if col == "0":
                if a is not None:
                    d["alpha"] = list(p0.alpha.a)
                else:
                    d["summary"] = "number of population vectors"
            records.append({"problem": d, "count": v})
    if fmt != "plain":
        _emit(fmt, records, str)
        return
    grid = {(r["problem"]["row"], r["problem"]["column"]): r["count"] for r in records}
    heads = ["row", "0" if a is not None else "0 (#alpha)", "1", "2", "3", "4"]
    rows = [[row.value] + [str(grid[row.value, c]) for c in ("0", "1", "2", "3", "4")] for row in Row]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(heads)]
    out = click.get_text_stream("stdout")
    out.write("  ".join(h.rjust(w) for h, w in zip(heads, widths)) + "\n")
    for r in rows:
        out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")


@main.command("sequence")
@click.option("--row", required=True, type=click.Choice([r.value for r in Row], case_sensitive=False))
@click.option("--col", "col", required=True, type=click.Choice(("4", "5", "6", "7", "8", "9", "10")))
@click.option("--terms", "n", type=int, default=9, show_default=True)
@format_option
def cmd_sequence(row, col, n, fmt):
    """Print the first terms (index 0 up) of a Column 4-10 sequence."""
    sid = sequence_id(row, col)
    try:
        seq = sequence_terms(sid, n)
    except ValueError as exc:
        raise UsageFailure(str(exc)) from None
    rec = {"sequence": sid.name, "anum": sid.anum, "offset": seq.offset, "terms": list(seq.terms)}
    _emit(fmt, [rec], lambda r: " ".join(map(str, r["terms"])))


def _suite_kwargs(name, max_m, max_b, offline, cache_dir):
    kw = {}
    if name in _SCALED:
        if max_m is not None:
            kw["max_m"] = max_m
        if max_b is not None:
            kw["max_b"] = max_b
    if name == "oeis":
        kw["offline"] = offline
        kw["cache"] = cache_dir
    return kw


@main.command("verify")
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--max-m", type=int, default=None)
@click.option("--max-b", type=int, default=None)
@click.option("--offline/--online", default=True, show_default=True, help="Allow OEIS downloads on a cache miss.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None,
              help=f"OEIS cache directory (default ${oeis_mod.CACHE_ENV}).")
@click.option("--workers", type=int, default=1, show_default=True, help="Threads used to run suites.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="json-lines", show_default=True)
def cmd_verify(suite, max_m, max_b, offline, cache_dir, workers, fmt):
    """Run a verification suite; exit 1 if any check fails."""
    names = list(verify_mod.SUITES) if suite == "all" else [suite]
    jobs = [(n, _suite_kwargs(n, max_m, max_b, offline, cache_dir)) for n in names]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(verify_mod.SUITES[n], **kw) for n, kw in jobs]
        # collected in suite order so the report is deterministic
        records = [r for f in futures for r in f.result()]
    failed = sum(not r["pass"] for r in records)
    _emit(fmt, records, lambda r: f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']}  "
                                  f"{json.dumps(r['details'], sort_keys=True)}")
    click.echo(f"{len(records) - failed}/{len(records)} checks passed", err=True)
    if failed:
        sys.exit(1)


@main.group("oeis")
def cmd_oeis():
    """Fetch and compare OEIS b-files."""


@cmd_oeis.command("fetch")
@click.argument("anums", nargs=-1, required=True)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@click.option("--base-url", default=None)
@click.option("--workers", type=int, default=4, show_default=True)
def cmd_oeis_fetch(anums, cache_dir, base_url, workers):
    """Download b-files into the cache directory."""
    try:
        anums = [oeis_mod.normalize_anum(a) for a in anums]
    except ValueError as exc:
        raise UsageFailure(str(exc)) from None

    def one(a):
        try:
            bf = oeis_mod.fetch(a, cache=cache_dir, base_url=base_url)
            return a, len(bf.entries), None
        except oeis_mod.OEISError as exc:
            return a, 0, str(exc)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(one, anums))
    bad = 0
    for a, n, err in results:
        if err:
            bad += 1
            click.echo(f"{a}: {err}", err=True)
        else:
            click.echo(f"{a}: {n} entries")
    if bad:
        sys.exit(1)


@cmd_oeis.command("compare")
@click.option("--row", required=True, type=click.Choice([r.value for r in Row], case_sensitive=False))
@click.option("--col", "col", required=True, type=click.Choice(("4", "5", "6", "7", "8", "9", "10")))
@click.option("--terms", "n", type=int, default=12, show_default=True)
@click.option("--offline/--online", default=True, show_default=True)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@format_option
def cmd_oeis_compare(row, col, n, offline, cache_dir, fmt):
    """Compare one computed sequence with its b-file; exit 1 on a mismatch."""
    sid = sequence_id(row, col)
    res = oeis_mod.compare(sequence_terms(sid, n), oeis_mod.load_bfile(sid.anum, cache=cache_dir, offline=offline))
    ok = res.first_mismatch is None
    rec = {"check": f"OEIS {sid.name} ~ {sid.anum}", "pass": ok,
           "details": {"matched": res.matched_prefix_length, "shift": res.offset_used,
                       "first_mismatch": res.first_mismatch}}
    _emit(fmt, [rec], lambda r: f"{'PASS' if ok else 'FAIL'}  {r['check']}  matched {res.matched_prefix_length}"
                                f" at shift {res.offset_used}")
    if not ok:
        sys.exit(1)


def run(argv=None) -> int:
    """Entry point with the exit-code contract: 0 ok, 1 failed check, 2 usage error."""
    try:
        main.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 2
    except click.exceptions.Abort:
        return 2
    except (ValueError, CapExceeded, oeis_mod.OEISError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def entry() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entry()
