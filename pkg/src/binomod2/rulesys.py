"""Residue-class recurrence systems: a(2^m q + r) = sum of coeff * a(e q + f).

A RuleSystem bundles base values (at minimum a(0)) with rules keyed by
(modulus exponent, residue). Matching prefers the longest modulus, so the
universal even rule a(2n) = a(n) coexists with finer odd-residue rules.
Evaluation is iterative and memoized; every rule strictly decreases the
index, so cost is polynomial in bit length even for 1000-bit arguments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NegativeValue, ParseError, UncoveredIndex

Term = tuple[int, int, int]  # (coeff, child_scale, child_offset)


@dataclass(frozen=True)
class ResidueRule:
    """a(2^modulus_exp * q + residue) = sum of coeff * a(scale * q + offset)."""

    modulus_exp: int
    residue: int
    terms: tuple[Term, ...]

    def __post_init__(self):
        m = self.modulus_exp
        if m < 1:
            raise ValueError("modulus_exp must be >= 1")
        if not 0 <= self.residue < (1 << m):
            raise ValueError(f"residue {self.residue} out of range for modulus 2^{m}")
        merged: dict[tuple[int, int], int] = {}
        for coeff, scale, offset in self.terms:
            if scale < 1 or scale & (scale - 1):
                raise ValueError(f"child scale {scale} is not a power of two")
            if scale >= (1 << m):
                raise ValueError(f"child scale {scale} not below modulus 2^{m}")
            if not 0 <= offset <= self.residue:
                raise ValueError(
                    f"child offset {offset} must lie in [0, residue {self.residue}]"
                )
            merged[(scale, offset)] = merged.get((scale, offset), 0) + coeff
        # canonical order: children sorted by scale then offset, descending, and
        # duplicate children merged, so equal rules compare equal
        canon = tuple(
            (c, s, f) for (s, f), c in sorted(merged.items(), reverse=True) if c != 0
        )
        object.__setattr__(self, "terms", canon)

    @property
    def modulus(self) -> int:
        return 1 << self.modulus_exp


class RuleSystem:
    """Base values plus residue rules with verified disjoint, exhaustive coverage."""

    def __init__(self, rules, base_values: dict[int, int]):
        self.rules: tuple[ResidueRule, ...] = tuple(
            sorted(rules, key=lambda r: (r.modulus_exp, r.residue))
        )
        self.base_values: dict[int, int] = dict(base_values)
        if 0 not in self.base_values:
            raise ValueError("base values must include a(0)")
        by_key: dict[tuple[int, int], ResidueRule] = {}
        for rule in self.rules:
            key = (rule.modulus_exp, rule.residue)
            if key in by_key:
                raise ValueError(f"duplicate rule for residue {rule.residue} mod {rule.modulus}")
            by_key[key] = rule
            # a rule that must cover q = 0 may not map the index to itself
            if rule.residue not in self.base_values:
                for _, _, offset in rule.terms:
                    if offset == rule.residue:
                        raise ValueError(
                            f"rule for residue {rule.residue} mod {rule.modulus} "
                            "loops at q=0; needs offset < residue or a base value"
                        )
        self._by_key = by_key
        self._moduli_desc = sorted({r.modulus_exp for r in self.rules}, reverse=True)
        self._memo: dict[int, int] = dict(self.base_values)
        self._check_coverage()

    def _check_coverage(self):
        max_m = self._moduli_desc[0] if self._moduli_desc else 0
        for residue in range(1 << max_m):
            if self._find_rule(residue) is None and residue not in self.base_values:
                raise UncoveredIndex(f"no rule matches residue {residue} mod {1 << max_m}")

    def _find_rule(self, n: int) -> ResidueRule | None:
        for m in self._moduli_desc:
            rule = self._by_key.get((m, n & ((1 << m) - 1)))
            if rule is not None:
                return rule
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RuleSystem):
            return NotImplemented
        return self.rules == other.rules and self.base_values == other.base_values

    def eval(self, n: int) -> int:
        """a(n); memoized across calls on this instance."""
        if n < 0:
            raise ValueError("index must be nonnegative")
        memo = self._memo
        stack = [n]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            rule = self._find_rule(cur)
            if rule is None:
                raise UncoveredIndex(f"no rule matches index {cur}")
            q = cur >> rule.modulus_exp
            children = [scale * q + offset for _, scale, offset in rule.terms]
            pending = [child for child in children if child not in memo]
            if pending:
                stack.extend(pending)
                continue
            value = sum(coeff * memo[child] for (coeff, _, _), child in zip(rule.terms, children))
            if value < 0:
                raise NegativeValue(f"a({cur}) = {value} < 0")
            memo[cur] = value
            stack.pop()
        return memo[n]

    def first_terms(self, count: int) -> list[int]:
        """[a(0), ..., a(count-1)]."""
        if count < 1:
            raise ValueError("count must be >= 1")
        return [self.eval(i) for i in range(count)]


def _format_child(scale: int, offset: int) -> str:
    head = "n" if scale == 1 else f"{scale}n"
    return f"a({head}+{offset})" if offset else f"a({head})"


def format_system(sys: RuleSystem) -> str:
    """Canonical textual form: base lines first, then rules by modulus and residue."""
    lines = [f"a({n}) = {v}" for n, v in sorted(sys.base_values.items())]
    for rule in sys.rules:
        head = f"{rule.modulus}n+{rule.residue}" if rule.residue else f"{rule.modulus}n"
        if not rule.terms:
            lines.append(f"a({head}) = 0")
            continue
        parts = []
        for i, (coeff, scale, offset) in enumerate(rule.terms):
            child = _format_child(scale, offset)
            mag = abs(coeff)
            body = child if mag == 1 else f"{mag}*{child}"
            if i == 0:
                parts.append(body if coeff >= 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coeff >= 0 else '-'} {body}")
        lines.append(f"a({head}) = " + " ".join(parts))
    return "\n".join(lines) + "\n"


_BASE_RE = re.compile(r"^a\((\d+)\)=(-?\d+)$")
_HEAD_RE = re.compile(r"^a\((\d+)n(?:\+(\d+))?\)=(.*)$")
_TERM_RE = re.compile(r"([+-]?)(?:(\d+)\*?)?a\((?:(\d+))?n(?:\+(\d+))?\)")


def parse_system(text: str) -> RuleSystem:
    """Parse the textual form; whitespace-insensitive, # starts a comment."""
    rules: list[ResidueRule] = []
    base: dict[int, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        line = re.sub(r"\s+", "", line)
        if not line:
            continue
        m = _BASE_RE.match(line)
        if m:
            idx = int(m.group(1))
            if idx in base:
                raise ParseError(f"duplicate base value a({idx})", line_no)
            base[idx] = int(m.group(2))
            continue
        m = _HEAD_RE.match(line)
        if m is None:
            raise ParseError(f"unrecognized line {raw.strip()!r}", line_no)
        modulus = int(m.group(1))
        if modulus < 2 or modulus & (modulus - 1):
            raise ParseError(f"modulus {modulus} is not a power of two >= 2", line_no)
        residue = int(m.group(2) or 0)
        body = m.group(3)
        terms: list[Term] = []
        if body != "0":
            pos = 0
            for t in _TERM_RE.finditer(body):
                if t.start() != pos:
                    raise ParseError(f"unparsable term near {body[pos:]!r}", line_no)
                if t.group(1) == "" and terms:
                    raise ParseError("missing sign between terms", line_no)
                sign = -1 if t.group(1) == "-" else 1
                coeff = sign * int(t.group(2) or 1)
                scale = int(t.group(3) or 1)
                offset = int(t.group(4) or 0)
                terms.append((coeff, scale, offset))
                pos = t.end()
            if pos != len(body) or not terms:
                raise ParseError(f"unparsable term near {body[pos:]!r}", line_no)
        try:
            rules.append(ResidueRule(modulus.bit_length() - 1, residue, tuple(terms)))
        except ValueError as exc:
            raise ParseError(str(exc), line_no) from exc
    return RuleSystem(rules, base)
