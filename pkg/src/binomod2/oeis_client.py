"""OEIS b-file parsing, disk caching, optional network fetch, comparison.

Fetching is polite (serialized, at least one second between requests) and
fully injectable for tests. The package ships b-file fixtures for every
cited sequence id, so everything works offline out of the box; a real
network fetch only happens for ids with neither a cache entry nor a
packaged fixture.
"""

from __future__ import annotations

import os
import re
import time
import urllib.request
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Sequence

from .errors import BadId, GapError, NetworkError, OfflineMiss, ParseError

CACHE_ENV_VAR = "BINOMOD2_OEIS_CACHE"
URL_TEMPLATE = "https://oeis.org/{anumber}/b{digits}.txt"
MIN_FETCH_SPACING = 1.0  # seconds between network requests

_ANUMBER_RE = re.compile(r"^A\d{6}$")


def normalize_anumber(text: str) -> str:
    """'a001316' -> 'A001316'; BadId for anything not A + 6 digits."""
    cand = text.strip()
    if cand[:1] in ("a", "A"):
        cand = "A" + cand[1:]
    if not _ANUMBER_RE.match(cand):
        raise BadId(f"{text!r} is not a sequence id (expected 'A' + 6 digits)")
    return cand


@dataclass(frozen=True)
class BFile:
    anumber: str
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not _ANUMBER_RE.match(self.anumber):
            raise BadId(f"{self.anumber!r} is not a sequence id")
        for (i0, _), (i1, _) in zip(self.entries, self.entries[1:]):
            if i1 != i0 + 1:
                raise GapError(f"indices {i0} and {i1} are not contiguous")

    @property
    def first_index(self) -> int:
        if not self.entries:
            raise ValueError(f"{self.anumber}: empty b-file")
        return self.entries[0][0]

    def values(self) -> list[int]:
        return [v for _, v in self.entries]

    def value_at(self, index: int) -> int | None:
        if not self.entries:
            return None
        pos = index - self.entries[0][0]
        if 0 <= pos < len(self.entries):
            return self.entries[pos][1]
        return None


def parse_bfile(data: bytes | str, anumber: str = "A000000") -> BFile:
    """Lines of '<index> <value>'; '#' lines and blank lines are skipped.

    Indices must increase by exactly 1; violations raise GapError with the
    offending line number, other malformed lines raise ParseError.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not utf-8 text: {exc}") from exc
    entries: list[tuple[int, int]] = []
    prev: int | None = None
    for line_no, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected '<index> <value>', got {raw!r}", line_no)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"non-integer field in {raw!r}", line_no) from exc
        if prev is not None and idx != prev + 1:
            raise GapError(f"index {idx} after {prev}", line_no)
        prev = idx
        entries.append((idx, val))
    return BFile(anumber=anumber, entries=tuple(entries))


def default_cache_dir() -> str:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "binomod2", "oeis")


def _packaged_fixture(anumber: str) -> bytes | None:
    res = resources.files("binomod2").joinpath(f"data/bfiles/{anumber}.txt")
    if res.is_file():
        return res.read_bytes()
    return None


def _default_fetch(url: str) -> bytes:
    with urllib.request.urlopen(url, timeout=30) as resp:
        if resp.status != 200:
            raise NetworkError(f"HTTP {resp.status} for {url}")
        return resp.read()


_last_fetch: list[float] = []  # module state implementing the spacing contract


def fetch_bfile(
    anumber: str,
    cache_dir: str | None = None,
    offline: bool = False,
    fetch_fn: Callable[[str], bytes] | None = None,
    sleep_fn: Callable[[float], None] = time.sleep,
    clock: Callable[[], float] = time.monotonic,
) -> BFile:
    """Resolve a b-file: cache, then packaged fixture, then the network.

    Bytes fetched from the network are stored verbatim in the cache, so a
    later parse of the cached file sees exactly what the server sent.
    """
    aid = normalize_anumber(anumber)
    root = cache_dir if cache_dir is not None else default_cache_dir()
    path = os.path.join(root, f"{aid}.txt")
    if os.path.exists(path):
        with open(path, "rb") as fh:
            return parse_bfile(fh.read(), aid)
    fixture = _packaged_fixture(aid)
    if fixture is not None:
        return parse_bfile(fixture, aid)
    if offline:
        raise OfflineMiss(f"{aid} is not cached and network use is disabled")
    url = URL_TEMPLATE.format(anumber=aid, digits=aid[1:])
    now = clock()
    if _last_fetch and now - _last_fetch[-1] < MIN_FETCH_SPACING:
        sleep_fn(MIN_FETCH_SPACING - (now - _last_fetch[-1]))
    try:
        data = (fetch_fn or _default_fetch)(url)
    except NetworkError:
        raise
    except Exception as exc:
        raise NetworkError(f"fetch failed for {url}: {exc}") from exc
    finally:
        _last_fetch.append(clock())
        del _last_fetch[:-1]
    os.makedirs(root, exist_ok=True)
    tmp = path + ".part"
    with open(tmp, "wb") as fh:
        fh.write(data)
    os.replace(tmp, path)
    return parse_bfile(data, aid)


@dataclass(frozen=True)
class ComparisonResult:
    anumber: str
    offset: int
    matched: int
    mismatch_index: int | None = None
    computed_value: int | None = None
    bfile_value: int | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch_index is None

    def describe(self) -> str:
        if self.ok:
            return f"{self.anumber}: {self.matched} terms match from index {self.offset}"
        return (
            f"{self.anumber}: mismatch at index {self.mismatch_index}"
            f" ({self.computed_value} vs {self.bfile_value});"
            f" {self.matched} terms matched before it"
        )


def compare(
    b: BFile, computed: Sequence[int], offset: int | None = None
) -> ComparisonResult:
    """Align computed[i] with the b-file entry at index offset+i.

    offset defaults to the b-file's first index. Positions outside the
    b-file's range are not compared; mismatch_index is minimal.
    """
    if offset is None:
        offset = b.first_index if b.entries else 0
    matched = 0
    for i, cv in enumerate(computed):
        bv = b.value_at(offset + i)
        if bv is None:
            continue
        if cv != bv:
            return ComparisonResult(
                anumber=b.anumber,
                offset=offset,
                matched=matched,
                mismatch_index=offset + i,
                computed_value=cv,
                bfile_value=bv,
            )
        matched += 1
    return ComparisonResult(anumber=b.anumber, offset=offset, matched=matched)
