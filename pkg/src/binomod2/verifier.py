"""Exhaustive identity checking over (n, k) grids, triple-equivalence
certification, and empirical conjecture of residue rule systems.

Identity statements are claims of the form F(p*n+q, p2*k+q2) = 0 or
= F(u*n+v, u2*k+v2), checked for all 0 <= n, k <= bound. The checked-in
corpus file enumerates such statements with expected outcomes; entries whose
printed source form is wrong are stored twice (printed form expect=fail,
corrected form expect=pass) so the suite documents the errata.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import numpy as np

from . import batch
from .errors import ParseError
from .parity_core import DEFAULT_ORACLE_BOUND, Coeffs, f_value
from .registry import RegistryEntry
from .rulesys import ResidueRule, RuleSystem
from .transform import mu, rlt_by_runs

Affine = tuple[int, int, int, int]  # (p, q, p2, q2) meaning (p*n+q, p2*k+q2)

DOMAIN_ALL = "all"
DOMAIN_K_GT_N = "k>n"


def _check_affine(pair: tuple[int, int], what: str):
    mult, off = pair
    if mult < 1 or mult & (mult - 1):
        raise ValueError(f"{what}: multiplier {mult} is not a power of two")
    if not 0 <= off < mult:
        raise ValueError(f"{what}: offset {off} not in [0, {mult})")


@dataclass(frozen=True)
class IdentityStatement:
    """F(lhs) = 0 (rhs None) or F(lhs) = F(rhs), at fixed coefficients."""

    coefficients: Coeffs
    lhs: Affine
    rhs: Affine | None = None
    domain: str = DOMAIN_ALL

    def __post_init__(self):
        _check_affine(self.lhs[:2], "lhs n side")
        _check_affine(self.lhs[2:], "lhs k side")
        if self.rhs is not None:
            _check_affine(self.rhs[:2], "rhs n side")
            _check_affine(self.rhs[2:], "rhs k side")
        if self.domain not in (DOMAIN_ALL, DOMAIN_K_GT_N):
            raise ValueError(f"unknown domain {self.domain!r}")

    def text(self) -> str:
        c = ",".join(str(a) for a in self.coefficients)
        rhs = "0" if self.rhs is None else f"F({_fmt_affine(self.rhs[:2], 'n')},{_fmt_affine(self.rhs[2:], 'k')})"
        s = f"F({_fmt_affine(self.lhs[:2], 'n')},{_fmt_affine(self.lhs[2:], 'k')}) = {rhs} @ coeffs={c}"
        if self.domain != DOMAIN_ALL:
            s += f" domain={self.domain}"
        return s


@dataclass(frozen=True)
class CorpusStatement:
    statement: IdentityStatement
    expect: str  # "pass" | "fail"
    ref: str = ""

    def line(self) -> str:
        s = self.statement.text()
        # canonical attribute order: coeffs [domain] expect ref
        s = s.replace(" domain=", f" expect={self.expect} domain=", 1)
        if " expect=" not in s:
            s += f" expect={self.expect}"
        return s + f' ref="{self.ref}"'


@dataclass(frozen=True)
class VerificationReport:
    label: str
    bound: int
    passed: bool
    counterexample: tuple[int, ...] | None
    checked_count: int
    detail: str = ""
    expected: str | None = None
    ref: str = ""

    @property
    def result(self) -> str:
        return "PASS" if self.passed else "FAIL"

    @property
    def as_expected(self) -> bool:
        return self.expected is None or self.passed == (self.expected == "pass")


def _fmt_affine(pair: tuple[int, int], var: str) -> str:
    mult, off = pair
    head = var if mult == 1 else f"{mult}{var}"
    return f"{head}+{off}" if off else head


_AFFINE_RE = re.compile(r"^(?:(\d+)\*?)?([nk])(?:\+(\d+))?$")


def _parse_affine(text: str, var: str, line_no: int | None) -> tuple[int, int]:
    m = _AFFINE_RE.match(text)
    if m is None or m.group(2) != var:
        raise ParseError(f"bad affine expression {text!r} (expected in {var})", line_no)
    return int(m.group(1) or 1), int(m.group(3) or 0)


_STMT_RE = re.compile(r"^F\(([^,()]+),([^,()]+)\)=(0|F\(([^,()]+),([^,()]+)\))$")


def parse_statement_line(line: str, line_no: int | None = None) -> CorpusStatement:
    """One corpus line -> CorpusStatement. Grammar:
    F(<pn+q>,<p'k+q'>) = 0|F(<un+v>,<u'k+v'>) @ coeffs=a1,a2,a3,a4
    [expect=pass|fail] [domain=k>n] ref="..."
    """
    if "@" not in line:
        raise ParseError("missing '@ coeffs=' section", line_no)
    stmt_part, attr_part = line.split("@", 1)
    compact = re.sub(r"\s+", "", stmt_part)
    m = _STMT_RE.match(compact)
    if m is None:
        raise ParseError(f"unrecognized statement {stmt_part.strip()!r}", line_no)
    lhs = _parse_affine(m.group(1), "n", line_no) + _parse_affine(m.group(2), "k", line_no)
    rhs = None
    if m.group(3) != "0":
        rhs = _parse_affine(m.group(4), "n", line_no) + _parse_affine(m.group(5), "k", line_no)
    cm = re.search(r"coeffs=(-?\d+),(-?\d+),(-?\d+),(-?\d+)", attr_part)
    if cm is None:
        raise ParseError("missing coeffs=a1,a2,a3,a4", line_no)
    coeffs = tuple(int(cm.group(i)) for i in range(1, 5))
    em = re.search(r"expect=(pass|fail)", attr_part)
    dm = re.search(r"domain=(k>n)", attr_part)
    rm = re.search(r'ref="([^"]*)"', attr_part)
    try:
        stmt = IdentityStatement(
            coefficients=coeffs,
            lhs=lhs,
            rhs=rhs,
            domain=dm.group(1) if dm else DOMAIN_ALL,
        )
    except ValueError as exc:
        raise ParseError(str(exc), line_no) from exc
    return CorpusStatement(
        statement=stmt,
        expect=em.group(1) if em else "pass",
        ref=rm.group(1) if rm else "",
    )


def load_corpus(text: str | None = None) -> list[CorpusStatement]:
    """Parse the packaged corpus fixture (or the given text)."""
    if text is None:
        text = resources.files("binomod2").joinpath("data/corpus.txt").read_text()
    out = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):  # comments are full lines only
            out.append(parse_statement_line(line, line_no))
    return out


def check_identity(
    stmt: IdentityStatement, bound: int, method: str = "grid"
) -> VerificationReport:
    """Check the statement for all 0 <= n, k <= bound.

    method "grid" sweeps with the vectorized kernel; "scalar" walks f_value
    cell by cell. Both report the lexicographically minimal counterexample.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    c = stmt.coefficients
    restricted = stmt.domain == DOMAIN_K_GT_N
    if method == "grid":
        lhs = batch.f_affine_grid(c, stmt.lhs, bound)
        rhs = (
            np.zeros_like(lhs)
            if stmt.rhs is None
            else batch.f_affine_grid(c, stmt.rhs, bound)
        )
        diff = lhs != rhs
        if restricted:
            idx = np.arange(bound + 1)
            diff &= idx[None, :] > idx[:, None]
            checked = (bound + 1) * bound // 2
        else:
            checked = (bound + 1) ** 2
        bad = np.argwhere(diff)
        cx = tuple(int(v) for v in bad[0]) if len(bad) else None
    elif method == "scalar":
        checked = (bound + 1) * bound // 2 if restricted else (bound + 1) ** 2
        cx = None
        p, q, p2, q2 = stmt.lhs
        for n in range(bound + 1):
            if cx is not None:
                break
            for k in range(bound + 1):
                if restricted and not k > n:
                    continue
                left = f_value(c, p * n + q, p2 * k + q2)
                if stmt.rhs is None:
                    right = 0
                else:
                    u, v, u2, v2 = stmt.rhs
                    right = f_value(c, u * n + v, u2 * k + v2)
                if left != right:
                    cx = (n, k)
                    break
    else:
        raise ValueError(f"unknown method {method!r}")
    return VerificationReport(
        label=stmt.text(),
        bound=bound,
        passed=cx is None,
        counterexample=cx,
        checked_count=checked,
    )


def check_lemma_corpus(
    bound: int, corpus: list[CorpusStatement] | None = None
) -> list[VerificationReport]:
    """One report per corpus statement, expected outcomes attached."""
    if corpus is None:
        corpus = load_corpus()
    reports = []
    for cs in corpus:
        r = check_identity(cs.statement, bound)
        reports.append(
            VerificationReport(
                label=r.label,
                bound=bound,
                passed=r.passed,
                counterexample=r.counterexample,
                checked_count=r.checked_count,
                expected=cs.expect,
                ref=cs.ref,
            )
        )
    return reports


def check_triple_equivalence(
    entry: RegistryEntry,
    bound: int,
    coefficients: Coeffs | None = None,
    oracle_bound: int = DEFAULT_ORACLE_BOUND,
) -> VerificationReport:
    """PASS iff direct summation, rule evaluation, and run-product agree on [0, bound].

    coefficients overrides the summation vector (used to certify aliases
    against the entry's rules and base).
    """
    c = entry.coefficients if coefficients is None else coefficients
    sums = batch.row_sums(c, bound, oracle_bound)
    rules_vals = entry.rules.first_terms(bound + 1)
    runs_vals = [rlt_by_runs(entry.base, n) for n in range(bound + 1)]
    cx = None
    detail = ""
    for n in range(bound + 1):
        if not int(sums[n]) == rules_vals[n] == runs_vals[n]:
            cx = (n,)
            detail = (
                f"sum={int(sums[n])} rules={rules_vals[n]} runs={runs_vals[n]} at n={n}"
            )
            break
    return VerificationReport(
        label=f"triple-equivalence {entry.name} coeffs={c}",
        bound=bound,
        passed=cx is None,
        counterexample=cx,
        checked_count=bound + 1,
        detail=detail,
    )


def solve_exact(rows: list[list[int]], rhs: list[int]) -> list[Fraction] | None:
    """Solve rows * x = rhs exactly over the rationals.

    Gaussian elimination with leftmost pivots; free variables are set to 0.
    Returns None when the system is inconsistent.
    """
    m = len(rows)
    if m == 0:
        return []
    ncol = len(rows[0])
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(ncol):
        sel = next((i for i in range(r, m) if a[i][col] != 0), None)
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        pv = a[r][col]
        a[r] = [x / pv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][ncol] != 0:
            return None
    sol = [Fraction(0)] * ncol
    for i, col in enumerate(pivots):
        sol[col] = a[i][ncol]
    return sol


@dataclass(frozen=True)
class ConjectureResult:
    coefficients: Coeffs
    modulus_exp: int
    discovered_rules: tuple[ResidueRule, ...]
    validation_bound: int
    failed_residues: tuple[int, ...] = ()

    def as_system(self) -> RuleSystem:
        if self.failed_residues:
            raise ValueError(f"no rule found for residues {self.failed_residues}")
        return RuleSystem(self.discovered_rules, {0: 1})


def _validate_rule(a: np.ndarray, m: int, r: int, terms, bound: int) -> bool:
    w = 1 << m
    qs = np.arange((bound - r) // w + 1, dtype=np.int64)
    want = a[w * qs + r]
    got = np.zeros_like(want)
    for coeff, e, f in terms:
        got += coeff * a[e * qs + f]
    return bool(np.array_equal(want, got))


def _fit_single(a, w, r, e, f, sample_q: int) -> int | None:
    """Largest-sample-consistent integer lambda with a(w q + r) = lambda a(e q + f)."""
    lam: Fraction | None = None
    for q in range(sample_q + 1):
        child = int(a[e * q + f])
        target = int(a[w * q + r])
        if child == 0:
            if target != 0:
                return None
            continue
        if lam is None:
            lam = Fraction(target, child)
        elif lam * child != target:
            return None
    if lam is None or lam.denominator != 1:
        return None
    return int(lam)


def conjecture_rules(
    c: Coeffs,
    max_modulus_exp: int,
    sample_bound: int,
    validation_bound: int,
    oracle_bound: int = DEFAULT_ORACLE_BOUND,
) -> ConjectureResult:
    """Empirically fit a residue rule system for the row-sum sequence of c.

    For each odd residue r mod 2^m the candidate children are
    a(2^j q + 2^j - 1) for 0 <= j < m (j=0 is a(q)); single-child rules are
    tried first in a structure-guided order, then an exact rational fit over
    the whole basis. Residue 2^m - 1 is fitted through the recurrence
    satisfied by the observed subsequence S(l) = a(2^l - 1). Every fitted
    rule is validated exactly on all indices up to validation_bound; rules
    that fail validation are dropped and reported in failed_residues.
    """
    m = max_modulus_exp
    if m < 1:
        raise ValueError("max_modulus_exp must be >= 1")
    if validation_bound < sample_bound:
        raise ValueError("validation_bound must be >= sample_bound")
    w = 1 << m
    if sample_bound < 4 * w:
        raise ValueError(f"sample_bound too small; need at least {4 * w}")
    a = batch.row_sums(c, validation_bound, oracle_bound)
    rules: list[ResidueRule] = []
    failed: list[int] = []

    # the halving rule is universal for row sums; test it outright
    even_ok = bool(
        np.array_equal(a[: (validation_bound // 2) + 1], a[0 : validation_bound + 1 : 2])
    )
    if even_ok:
        rules.append(ResidueRule(1, 0, ((1, 1, 0),)))
    else:
        failed.append(0)

    lmax = validation_bound.bit_length() - 1
    S = [int(a[(1 << l) - 1]) for l in range(lmax + 1)]
    basis = [(1 << j, (1 << j) - 1) for j in range(m)]

    for r in range(1, w, 2):
        terms = None
        if r == w - 1:
            # fit feedback coefficients of S and translate them into children
            ls = range(m - 1, lmax)
            rows = [[S[l - j] for j in range(m)] for l in ls]
            d = solve_exact(rows, [S[l + 1] for l in ls])
            if d is not None and all(x.denominator == 1 for x in d):
                cand = [
                    (int(d[j]), 1 << (m - 1 - j), (1 << (m - 1 - j)) - 1)
                    for j in range(m)
                    if d[j] != 0
                ]
                if _validate_rule(a, m, r, cand, validation_bound):
                    terms = cand
        else:
            # structure-guided single-child candidates: plain a(q) first for
            # low residues; for high residues the split of r picks the scale
            if r < (1 << (m - 1)):
                order = list(range(m))
            else:
                j0 = m - mu(r)[2]
                order = [j0] + [j for j in range(m) if j != j0]
            sample_q = max(0, (sample_bound - r) // w)
            for j in order:
                e, f = basis[j]
                if f >= r:  # child index would not decrease at q=0
                    continue
                lam = _fit_single(a, w, r, e, f, sample_q)
                if lam is not None and _validate_rule(
                    a, m, r, [(lam, e, f)], validation_bound
                ):
                    terms = [(lam, e, f)]
                    break
        if terms is None:
            # exact rational fit over the full basis on sampled indices
            usable = [(e, f) for e, f in basis if f < r or r == w - 1]
            sample_q = max(len(usable) + 4, (sample_bound - r) // w)
            qs = range(min(sample_q, (validation_bound - r) // w) + 1)
            rows = [[int(a[e * q + f]) for e, f in usable] for q in qs]
            sol = solve_exact(rows, [int(a[w * q + r]) for q in qs])
            if sol is not None and all(x.denominator == 1 for x in sol):
                cand = [
                    (int(x), e, f) for x, (e, f) in zip(sol, usable) if x != 0
                ]
                if _validate_rule(a, m, r, cand, validation_bound):
                    terms = cand
        if terms is None:
            failed.append(r)
        else:
            rules.append(ResidueRule(m, r, tuple(terms)))

    return ConjectureResult(
        coefficients=tuple(c),
        modulus_exp=m,
        discovered_rules=tuple(rules),
        validation_bound=validation_bound,
        failed_residues=tuple(failed),
    )
