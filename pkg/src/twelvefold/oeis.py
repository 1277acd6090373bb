"""OEIS b-files: parse, render, cache, fetch, and compare against computed terms.

A b-file is plain text, one ``<index> <value>`` pair per line; ``#`` lines
and blank lines are ignored.  Lookups go cache directory -> vendored
snapshot -> network.
"""

from __future__ import annotations

import logging
import os
import re
import threading
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

log = logging.getLogger(__name__)

CACHE_ENV = "TWELVEFOLD_OEIS_CACHE"
BASE_URL_ENV = "TWELVEFOLD_OEIS_URL"
DEFAULT_BASE_URL = "https://oeis.org"
SHIFTS = range(-2, 3)

_ANUM = re.compile(r"^A?(\d{1,6})$")


class BFileError(ValueError):
    """Malformed b-file text."""


class OEISError(RuntimeError):
    pass


class NotFound(OEISError):
    pass


class OfflineError(OEISError):
    pass


def normalize_anum(anum: str) -> str:
    """``'41'``, ``'000041'`` and ``'A000041'`` all become ``'A000041'``."""
    mo = _ANUM.match(str(anum).strip().upper())
    if not mo:
        raise ValueError(f"not an OEIS A-number: {anum!r}")
    return "A" + mo.group(1).zfill(6)


def bfile_name(anum: str) -> str:
    return f"b{normalize_anum(anum)[1:]}.txt"


@dataclass(frozen=True)
class BFile:
    anum: str
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        idx = [i for i, _ in self.entries]
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise BFileError(f"{self.anum}: indices must be strictly increasing")

    @property
    def offset(self) -> int | None:
        return self.entries[0][0] if self.entries else None

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def values(self) -> list[int]:
        return [v for _, v in self.entries]


def parse_bfile(text: str | bytes, anum: str = "") -> BFile:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    entries: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise BFileError(f"line {lineno}: expected '<index> <value>', got {raw!r}")
        try:
            i, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer token in {raw!r}") from None
        if entries and i <= entries[-1][0]:
            raise BFileError(f"line {lineno}: index {i} does not increase")
        entries.append((i, v))
    return BFile(normalize_anum(anum) if anum else "", tuple(entries))


def render_bfile(bfile: BFile) -> str:
    return "".join(f"{i} {v}\n" for i, v in bfile.entries)


@dataclass(frozen=True)
class ComparisonResult:
    anum: str
    matched_prefix_length: int
    first_mismatch: int | None
    offset_used: int
    compared: int

    @property
    def full_match(self) -> bool:
        return self.first_mismatch is None and self.matched_prefix_length == self.compared > 0


def _align(terms: Sequence[int], offset: int, table: dict[int, int], shift: int):
    """Matched prefix, first mismatch (term index) and overlap for one shift."""
    matched, mismatch, compared = 0, None, 0
    started = False
    for i, t in enumerate(terms):
        key = offset + i + shift
        if key not in table:
            if started:
                break
            continue
        started = True
        compared += 1
        if t != table[key]:
            mismatch = offset + i
            break
        matched += 1
    return matched, mismatch, compared


def compare(terms, bfile: BFile, *, offset: int | None = None) -> ComparisonResult:
    """Best alignment of computed terms against a b-file, trying shifts -2..2.

    ``terms`` is a :class:`~twelvefold.sequences.SequenceTerms` or a plain list
    (then ``offset`` defaults to 0).  A shift ``s`` pairs term index ``k`` with
    b-file index ``k + s``.
    """
    values = getattr(terms, "terms", terms)
    if offset is None:
        offset = getattr(terms, "offset", 0)
    values = list(values)
    if not values or not bfile.entries:
        raise ValueError("compare needs non-empty terms and b-file")
    table = bfile.as_dict()
    best = None
    for s in sorted(SHIFTS, key=lambda s: (abs(s), s)):
        matched, mismatch, compared = _align(values, offset, table, s)
        key = (matched, mismatch is None)
        if best is None or key > best[0]:
            best = (key, ComparisonResult(bfile.anum, matched, mismatch, s, compared))
    return best[1]


# -- storage ------------------------------------------------------------------------

_locks: dict[str, threading.Lock] = {}
_locks_guard = threading.Lock()


def _lock_for(anum: str) -> threading.Lock:
    with _locks_guard:
        return _locks.setdefault(anum, threading.Lock())


def cache_dir(path: str | os.PathLike | None = None) -> Path:
    if path is not None:
        return Path(path)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "twelvefold" / "oeis"


def snapshot_path(anum: str) -> Path | None:
    p = resources.files("twelvefold") / "data" / "bfiles" / bfile_name(anum)
    return Path(str(p)) if p.is_file() else None


def fetch(anum: str, *, cache: str | os.PathLike | None = None, offline: bool = False,
          base_url: str | None = None, timeout: float = 30.0) -> BFile:
    """Return the b-file for ``anum`` from the cache, downloading it on a miss."""
    anum = normalize_anum(anum)
    target = cache_dir(cache) / bfile_name(anum)
    with _lock_for(anum):
        if target.is_file():
            return parse_bfile(target.read_text(), anum)
        if offline:
            raise OfflineError(f"{anum} is not cached in {target.parent} and network access is off")
        base = (base_url or os.environ.get(BASE_URL_ENV) or DEFAULT_BASE_URL).rstrip("/")
        url = f"{base}/{anum}/{bfile_name(anum)}"
        log.info("fetching %s", url)
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                body = resp.read()
        except urllib.error.HTTPError as exc:
            if exc.code == 404:
                raise NotFound(f"{anum}: no b-file at {url}") from None
            raise OEISError(f"{anum}: HTTP {exc.code} from {url}") from None
        except (urllib.error.URLError, OSError) as exc:
            raise OEISError(f"{anum}: cannot reach {url}: {exc}") from None
        bfile = parse_bfile(body, anum)
        if not bfile.entries:
            raise NotFound(f"{anum}: empty b-file at {url}")
        target.parent.mkdir(parents=True, exist_ok=True)
        tmp = target.with_suffix(".tmp")
        tmp.write_bytes(body)
        tmp.replace(target)
        return bfile


def load_bfile(anum: str, *, cache: str | os.PathLike | None = None, offline: bool = True,
               base_url: str | None = None) -> BFile:
    """Cache first, then the vendored snapshot, then (if allowed) the network."""
    anum = normalize_anum(anum)
    target = cache_dir(cache) / bfile_name(anum)
    if target.is_file():
        return parse_bfile(target.read_text(), anum)
    snap = snapshot_path(anum)
    if snap is not None:
        return parse_bfile(snap.read_text(), anum)
    return fetch(anum, cache=cache, offline=offline, base_url=base_url)
