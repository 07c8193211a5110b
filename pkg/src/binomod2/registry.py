"""Built-in catalog: coefficient vectors, base sequences, rule systems, OEIS ids.

Each entry ties together the three routes to the same sequence: direct parity
summation with the entry's coefficients, the residue rule system, and the run
length transform of the base. Aliases are alternative coefficient vectors that
generate the identical sequence. OEIS cells with no published id stay None.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NotFound
from .parity_core import Coeffs
from .rulesys import RuleSystem, format_system, parse_system
from .transform import LinearRecurrence


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    summary: str
    coefficients: Coeffs
    base: LinearRecurrence
    rules: RuleSystem = field(compare=False)
    oeis_sequence: str | None
    oeis_transform: str | None
    aliases: tuple[Coeffs, ...] = ()
    alt_names: tuple[str, ...] = ()

    def all_coefficient_vectors(self) -> tuple[Coeffs, ...]:
        return (self.coefficients,) + self.aliases


def _entry(name, summary, coeffs, initial, feedback, rules_text,
           oeis_sequence=None, oeis_transform=None, aliases=(), alt_names=()):
    return RegistryEntry(
        name=name,
        summary=summary,
        coefficients=coeffs,
        base=LinearRecurrence(tuple(initial), tuple(feedback)),
        rules=parse_system(rules_text),
        oeis_sequence=oeis_sequence,
        oeis_transform=oeis_transform,
        aliases=tuple(aliases),
        alt_names=tuple(alt_names),
    )


@lru_cache(maxsize=1)
def builtin_entries() -> tuple[RegistryEntry, ...]:
    return (
        _entry(
            "powers-of-2",
            "count of odd entries in row n of Pascal's triangle, 2^popcount(n)",
            (1, 0, 0, 1), [1, 2], [2, 0],
            """
            a(0) = 1
            a(2n) = a(n)
            a(4n+1) = 2*a(n)
            a(4n+3) = 2*a(2n+1)
            """,
            oeis_sequence="A000079", oeis_transform="A001316",
            alt_names=("pow2", "gould", "dress"),
        ),
        _entry(
            "fibonacci",
            "transform of 1,1,2,3,5,8,...",
            (1, -1, 0, 2), [1, 1], [1, 1],
            """
            a(0) = 1
            a(2n) = a(n)
            a(4n+1) = a(n)
            a(4n+3) = a(2n+1) + a(n)
            """,
            oeis_sequence="A000045", oeis_transform="A246028",
            aliases=((0, 2, 1, -1), (1, 3, 0, 2), (1, 3, 1, 1)),
            alt_names=("fib",),
        ),
        _entry(
            "one-plus-powers-of-2",
            "transform of 1,1,2,4,8,16,...",
            (1, 0, 0, 2), [1, 1], [2, 0],
            """
            a(0) = 1
            a(2n) = a(n)
            a(4n+1) = a(n)
            a(4n+3) = 2*a(2n+1)
            """,
            oeis_sequence="A011782", oeis_transform="A245195",
            alt_names=("pow2plus",),
        ),
        _entry(
            "one-then-twos",
            "transform of 1,2,2,2,2,...",
            (1, 2, 0, 2), [1, 2], [1, 0],
            """
            a(0) = 1
            a(2n) = a(n)
            a(4n+1) = 2*a(n)
            a(4n+3) = a(2n+1)
            """,
            oeis_sequence="A040000",
            aliases=((1, 2, 1, 0),),
            alt_names=("x1222",),
        ),
        _entry(
            "positive-integers",
            "transform of 1,2,3,4,5,...",
            (1, 1, 1, -1), [1, 2], [2, -1],
            """
            a(0) = 1
            a(2n) = a(n)
            a(4n+1) = 2*a(n)
            a(4n+3) = 2*a(2n+1) - a(n)
            """,
            oeis_sequence="A000027", oeis_transform="A106737",
            aliases=((1, 1, 0, 2), (1, 2, 0, 1), (1, 2, 1, 1)),
            alt_names=("posint",),
        ),
        _entry(
            "all-ones",
            "transform fixed point: constant 1",
            (1, -1, 0, 1), [1, 1], [1, 0],
            """
            a(0) = 1
            a(2n) = a(n)
            a(4n+1) = a(n)
            a(4n+3) = a(n)
            """,
            oeis_sequence="A000012", oeis_transform="A000012",
            alt_names=("ones",),
        ),
        _entry(
            "narayana-cows",
            "transform of 1,1,1,2,3,4,6,9,13,... (b(n) = b(n-1) + b(n-3))",
            (1, -1, 0, 6), [1, 1, 1], [1, 0, 1],
            """
            a(0) = 1
            a(2n) = a(n)
            a(8n+1) = a(n)
            a(8n+3) = a(n)
            a(8n+5) = a(2n+1)
            a(8n+7) = a(n) + a(4n+3)
            """,
            oeis_sequence="A000930",
            alt_names=("narayana", "cows"),
        ),
        _entry(
            "repeated-integers",
            "transform of 1,1,2,2,3,3,4,4,...",
            (1, 3, 0, 6), [1, 1, 2], [1, 1, -1],
            """
            a(0) = 1
            a(2n) = a(n)
            a(8n+1) = a(n)
            a(8n+3) = 2*a(n)
            a(8n+5) = a(2n+1)
            a(8n+7) = a(4n+3) + a(2n+1) - a(n)
            """,
            oeis_sequence="A008619",
            alt_names=("double",),
        ),
        _entry(
            "lucas-prepended",
            "transform of 1,1,2,1,3,4,7,11,... (expansion of (1-2x^3)/(1-x-x^2))",
            (1, 2, 2, -1), [1, 1, 2, 1], [1, 1, 0, 0],
            """
            a(0) = 1
            a(2n) = a(n)
            a(16n+1) = a(n)
            a(16n+3) = 2*a(n)
            a(16n+5) = a(n)
            a(16n+7) = a(n)
            a(16n+9) = a(2n+1)
            a(16n+11) = 2*a(2n+1)
            a(16n+13) = a(4n+3)
            a(16n+15) = a(8n+7) + a(4n+3)
            """,
            alt_names=("lucas",),
        ),
        _entry(
            "truncated-fibonacci",
            "transform of 1,2,3,5,8,13,...",
            (0, 3, 0, 1), [1, 2], [1, 1],
            """
            a(0) = 1
            a(2n) = a(n)
            a(4n+1) = 2*a(n)
            a(4n+3) = a(2n+1) + a(n)
            """,
            oeis_transform="A245564",
            aliases=((0, 3, 0, 2), (0, 6, 0, 2), (0, 6, 0, 4), (0, 12, 0, 4), (0, 12, 0, 8)),
            alt_names=("fibt",),
        ),
    )


def lookup(name_or_anumber: str) -> RegistryEntry:
    """Entry by case-insensitive name, alternative name, or OEIS A-number."""
    key = name_or_anumber.strip().casefold()
    for entry in builtin_entries():
        candidates = [entry.name, *entry.alt_names, entry.oeis_sequence, entry.oeis_transform]
        if any(c is not None and c.casefold() == key for c in candidates):
            return entry
    raise NotFound(f"no registry entry matches {name_or_anumber!r}")


def lookup_by_coefficients(c: Coeffs) -> RegistryEntry:
    """Entry whose primary vector or one of whose aliases equals c."""
    c = tuple(c)
    for entry in builtin_entries():
        if c in entry.all_coefficient_vectors():
            return entry
    raise NotFound(f"no registry entry has coefficient vector {c}")


def catalog_records() -> list[dict]:
    """JSON-ready export: one record per entry."""
    records = []
    for e in builtin_entries():
        records.append(
            {
                "name": e.name,
                "alt_names": list(e.alt_names),
                "summary": e.summary,
                "coefficients": list(e.coefficients),
                "aliases": [list(a) for a in e.aliases],
                "base_initial": list(e.base.initial),
                "base_feedback": list(e.base.feedback),
                "rules": format_system(e.rules),
                "oeis_sequence": e.oeis_sequence,
                "oeis_transform": e.oeis_transform,
            }
        )
    return records
