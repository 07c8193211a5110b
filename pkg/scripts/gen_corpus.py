"""Generate src/binomod2/data/corpus.txt.

Self-contained on purpose: the statements below are re-verified against a
Pascal-triangle-mod-2 oracle (row XOR recurrence, no bitmask shortcuts)
before the file is written, so the fixture never depends on the package
code it is meant to test. Statements whose traditional printed form is
wrong are emitted twice: the printed form with expect=fail and the
corrected form with expect=pass (refs carry #printed / #corrected).

Run from the repository root:  python3 scripts/gen_corpus.py
"""

import math
import os
import sys

BOUND = 128  # every line is certified at this bound before freezing

# ---------------------------------------------------------------- oracle

ROWS = [1]


def _pascal_bit(x: int, y: int) -> int:
    while len(ROWS) <= x:
        r = ROWS[-1]
        ROWS.append(r ^ (r << 1))
    return (ROWS[x] >> y) & 1


assert all(
    _pascal_bit(x, y) == math.comb(x, y) % 2 for x in range(80) for y in range(x + 1)
)


def _comb_par(x: int, y: int) -> int:
    if x < 0 or y < 0 or y > x:
        return 0
    return _pascal_bit(x, y)


def F(c, n, k):
    a1, a2, a3, a4 = c
    return _comb_par(a1 * n + a2 * k, a3 * n + a4 * k) & _comb_par(n, k)


def counterexample(c, lhs, rhs, kgtn, bound):
    p, q, pp, qq = lhs
    for n in range(bound + 1):
        for k in range(bound + 1):
            if kgtn and not k > n:
                continue
            left = F(c, p * n + q, pp * k + qq)
            right = 0 if rhs is None else F(c, rhs[0] * n + rhs[1], rhs[2] * k + rhs[3])
            if left != right:
                return (n, k)
    return None


# ------------------------------------------------------------- inventory

Z = None
ID = (1, 0, 1, 0)

MAINS = [
    ("pow2", (1, 0, 0, 1)),
    ("fib", (1, -1, 0, 2)),
    ("pow2plus", (1, 0, 0, 2)),
    ("x1222", (1, 2, 0, 2)),
    ("posint", (1, 1, 1, -1)),
    ("ones", (1, -1, 0, 1)),
    ("cows", (1, -1, 0, 6)),
    ("double", (1, 3, 0, 6)),
    ("lucas", (1, 2, 2, -1)),
    ("fibt", (0, 3, 0, 1)),
]
ALIASES = {
    "fib": [(0, 2, 1, -1), (1, 3, 0, 2), (1, 3, 1, 1)],
    "x1222": [(1, 2, 1, 0)],
    "posint": [(1, 1, 0, 2), (1, 2, 0, 1), (1, 2, 1, 1)],
    "fibt": [(0, 3, 0, 2), (0, 6, 0, 2), (0, 6, 0, 4), (0, 12, 0, 4), (0, 12, 0, 8)],
}


def conds(c):
    """Which conditional column/row reductions the vector satisfies."""
    a1, _, a3, _ = c
    A = a3 in (0, 1) and (a1 == 1 or a3 == 0)
    B = (a3 & ~a1) % 4 == 0 and 0 <= a1 < 4 and 0 <= a3 < 4
    C = (a3 & ~a1) % 4 != 0
    D = (3 * a3 & ~(3 * a1)) % 4 != 0
    E = (a3 & ~a1) % 2 != 0
    return A, B, C, D, E


def build():
    out = []  # (ref, coeffs, lhs, rhs, kgtn, expect)

    def add(ref, c, lhs, rhs, kgtn=False, expect="pass"):
        out.append((ref, c, lhs, rhs, kgtn, expect))

    allvecs = []
    for nm, c in MAINS:
        allvecs.append((nm, c))
        for i, al in enumerate(ALIASES.get(nm, []), start=1):
            allvecs.append((f"{nm}-alias{i}", al))

    # unconditional facts, once per main vector
    for nm, c in MAINS:
        add(f"domain-zero:{nm}", c, (1, 0, 1, 0), Z, kgtn=True)
        add(f"halving:{nm}", c, (4, 0, 4, 0), (2, 0, 2, 0))
        add(f"halving:{nm}", c, (2, 0, 2, 0), ID)
        for lhs in [
            (2, 0, 2, 1), (4, 1, 4, 2), (4, 1, 4, 3), (4, 2, 4, 1),
            (4, 2, 4, 3), (4, 0, 4, 1), (4, 0, 4, 2), (4, 0, 4, 3),
        ]:
            add(f"zero-col:{nm}", c, lhs, Z)

    # conditional reductions, instantiated for every vector that qualifies
    for nm, c in allvecs:
        A, B, C, D, E = conds(c)
        if A:
            add(f"odd-rows:{nm}", c, (4, 1, 4, 0), ID)
            add(f"odd-rows:{nm}", c, (4, 3, 4, 0), ID)
            add(f"odd-rows:{nm}", c, (2, 1, 2, 0), ID)
        if B and not A:
            add(f"col0-quad:{nm}", c, (4, 1, 4, 0), ID)
        if C:
            add(f"col0-quad-zero:{nm}", c, (4, 1, 4, 0), Z)
        if D:
            add(f"col0-quad3-zero:{nm}", c, (4, 3, 4, 0), Z)
        if E:
            add(f"col0-odd-zero:{nm}", c, (2, 1, 2, 0), Z)

    # residue maps mod 4 for the order-2 vectors
    L2 = {
        "fib": [((4, 1, 4, 1), Z), ((4, 3, 4, 3), Z),
                ((4, 3, 4, 1), ID), ((4, 3, 4, 2), (2, 1, 2, 1))],
        "fibt": [((4, 1, 4, 1), ID), ((4, 3, 4, 1), ID),
                 ((4, 3, 4, 2), (2, 1, 2, 1)), ((4, 3, 4, 3), Z)],
        "pow2plus": [((4, 1, 4, 1), Z), ((4, 3, 4, 1), ID),
                     ((4, 3, 4, 2), (2, 1, 2, 1)), ((4, 3, 4, 3), (2, 1, 2, 1))],
        "x1222": [((4, 1, 4, 1), ID), ((4, 3, 4, 1), Z),
                  ((4, 3, 4, 3), Z), ((4, 3, 4, 2), (2, 1, 2, 1))],
        "posint": [((4, 1, 4, 1), ID), ((4, 3, 4, 1), Z),
                   ((4, 3, 4, 2), (2, 1, 2, 1)), ((4, 3, 4, 3), (2, 1, 2, 1))],
        "ones": [((4, 1, 4, 1), Z), ((4, 3, 4, 1), Z),
                 ((4, 3, 4, 2), Z), ((4, 3, 4, 3), Z)],
    }
    coeffs_of = dict(MAINS)
    for nm, sts in L2.items():
        for lhs, rhs in sts:
            add(f"quad:{nm}", coeffs_of[nm], lhs, rhs)

    # vanishing pattern mod 8 for the order-3 vectors
    for nm in ("cows", "double"):
        c = coeffs_of[nm]
        for i in range(1, 8):
            add(f"oct-zero:{nm}", c, (8, 0, 8, i), Z)
        for i in range(2, 8):
            add(f"oct-zero:{nm}", c, (8, 1, 8, i), Z)
        for i in range(4, 8):
            add(f"oct-zero:{nm}", c, (8, 3, 8, i), Z)
        for i in (2, 3, 6, 7):
            add(f"oct-zero:{nm}", c, (8, 5, 8, i), Z)
        a1, _, a3, _ = c
        for i in (1, 3, 5):
            za = i * a3 & ~(i * a1)
            if za % 8 == 0 and 0 <= i * a1 < 8 and 0 <= i * a3 < 8:
                add(f"oct-zero:{nm}", c, (8, i, 8, 0), ID)
            elif za % 8 != 0:
                add(f"oct-zero:{nm}", c, (8, i, 8, 0), Z)

    # residue maps mod 8 for the order-3 vectors
    cw = coeffs_of["cows"]
    for lhs, rhs in (
        [((8, 1, 8, 1), Z)] + [((8, 3, 8, i), Z) for i in (1, 2, 3)]
        + [((8, 5, 8, 1), Z), ((8, 5, 8, 5), Z), ((8, 5, 8, 4), (2, 1, 2, 1))]
        + [((8, 7, 8, i), Z) for i in (3, 5, 6, 7)]
        + [((8, 7, 8, 0), ID), ((8, 7, 8, 1), ID), ((8, 7, 8, 2), (4, 3, 4, 1)),
           ((8, 7, 8, 4), (4, 3, 4, 2)), ((4, 3, 4, 3), Z)]
    ):
        add("oct:cows", cw, lhs, rhs)
    db = coeffs_of["double"]
    for lhs, rhs in (
        [((8, 1, 8, 1), Z), ((8, 3, 8, 1), ID), ((8, 3, 8, 2), Z), ((8, 3, 8, 3), Z),
         ((8, 5, 8, 1), Z), ((8, 5, 8, 5), Z), ((8, 5, 8, 4), (2, 1, 2, 1))]
        + [((8, 7, 8, i), Z) for i in (1, 3, 6, 7)]
        + [((8, 7, 8, 0), ID), ((8, 7, 8, 2), (4, 3, 4, 1)), ((8, 7, 8, 4), (4, 3, 4, 2)),
           ((8, 7, 8, 5), (2, 1, 2, 1)), ((4, 3, 4, 3), Z)]
    ):
        add("oct:double", db, lhs, rhs)

    # vanishing pattern mod 16 for the order-4 vector
    lc = coeffs_of["lucas"]
    z16 = (
        [(0, i) for i in range(1, 16)] + [(1, i) for i in range(2, 16)]
        + [(3, i) for i in range(4, 16)] + [(5, i) for i in [2, 3] + list(range(6, 16))]
        + [(7, i) for i in range(8, 16)]
        + [(9, i) for i in list(range(2, 8)) + list(range(10, 16))]
        + [(11, i) for i in (4, 5, 6, 7, 12, 13, 14, 15)]
        + [(13, i) for i in (2, 3, 6, 7, 10, 11, 14, 15)]
    )
    for r, i in z16:
        add("hex-zero:lucas", lc, (16, r, 16, i), Z)
    for i in (1, 3, 5, 7, 9, 11, 13):
        assert (i * lc[2] & ~(i * lc[0])) % 16 != 0
        add("hex-zero:lucas", lc, (16, i, 16, 0), Z)

    # residue maps mod 16 for the order-4 vector; the traditional statement
    # of the 8k+5 / 8k+6 / 16k+12..14 columns is wrong, so those lines are
    # kept as expect=fail next to the corrected ones
    hex_pass = (
        [((16, 1, 16, 1), ID), ((16, 3, 16, 1), ID), ((16, 3, 16, 2), ID),
         ((16, 5, 16, 5), ID), ((16, 7, 16, 4), ID),
         ((16, 3, 16, 3), Z), ((16, 5, 16, 1), Z), ((16, 5, 16, 4), Z),
         ((16, 7, 16, 1), Z), ((16, 7, 16, 2), Z), ((16, 7, 16, 3), Z),
         ((16, 7, 16, 5), Z), ((16, 7, 16, 6), Z), ((16, 7, 16, 7), Z),
         ((16, 9, 16, 8), Z), ((16, 11, 16, 3), Z), ((16, 11, 16, 8), Z),
         ((16, 11, 16, 11), Z),
         ((16, 13, 16, 4), Z), ((16, 13, 16, 8), Z), ((16, 13, 16, 12), Z),
         ((16, 13, 16, 13), Z),
         ((16, 9, 16, 1), (2, 1, 2, 0)), ((16, 11, 16, 1), (2, 1, 2, 0)),
         ((16, 11, 16, 2), (2, 1, 2, 0)), ((16, 13, 16, 1), (2, 1, 2, 0)),
         ((16, 9, 16, 9), (2, 1, 2, 1)), ((16, 11, 16, 9), (2, 1, 2, 1)),
         ((16, 11, 16, 10), (2, 1, 2, 1)),
         ((16, 13, 16, 5), (4, 3, 4, 1)), ((16, 13, 16, 9), (4, 3, 4, 1))]
        + [((16, 15, 16, i), Z) for i in (1, 2, 3, 4, 7, 9, 10, 11, 15)]
        + [((16, 15, 16, i), (4, 3, 4, 1)) for i in (5, 6, 8)]
        + [((16, 15, 16, 0), (8, 7, 8, 0)), ((8, 7, 8, 0), (2, 1, 2, 0))]
        + [((8, 7, 8, i), Z) for i in (1, 2, 3, 7)]
        + [((8, 7, 8, 4), (4, 3, 4, 1))]
        + [((4, 3, 4, 1), (4, 3, 4, 2)), ((4, 3, 4, 0), (2, 1, 2, 0)),
           ((4, 3, 4, 3), Z)]
    )
    for lhs, rhs in hex_pass:
        add("hex:lucas", lc, lhs, rhs)
    hex_printed_wrong = [
        ((16, 15, 16, 12), (4, 3, 4, 1)),
        ((16, 15, 16, 13), (4, 3, 4, 1)),
        ((16, 15, 16, 14), (4, 3, 4, 1)),
        ((8, 7, 8, 5), (4, 3, 4, 1)),
        ((8, 7, 8, 6), (4, 3, 4, 1)),
    ]
    for lhs, rhs in hex_printed_wrong:
        add("hex:lucas#printed", lc, lhs, rhs, expect="fail")
    hex_corrected = [
        ((16, 15, 16, 12), (8, 7, 8, 5)),
        ((16, 15, 16, 13), (8, 7, 8, 5)),
        ((16, 15, 16, 14), (8, 7, 8, 5)),
        ((8, 7, 8, 6), (8, 7, 8, 5)),
    ]
    for lhs, rhs in hex_corrected:
        add("hex:lucas#corrected", lc, lhs, rhs)

    # deliberately false controls: the harness must see these FAIL
    add("ctl-1:fib", coeffs_of["fib"], (4, 1, 4, 1), ID, expect="fail")
    add("ctl-2:pow2", coeffs_of["pow2"], (2, 0, 2, 1), ID, expect="fail")
    return out


# ------------------------------------------------------------ formatting


def fmt_affine(mult, off, var):
    head = var if mult == 1 else f"{mult}{var}"
    return f"{head}+{off}" if off else head


def fmt_line(ref, c, lhs, rhs, kgtn, expect):
    left = f"F({fmt_affine(lhs[0], lhs[1], 'n')},{fmt_affine(lhs[2], lhs[3], 'k')})"
    right = (
        "0" if rhs is None
        else f"F({fmt_affine(rhs[0], rhs[1], 'n')},{fmt_affine(rhs[2], rhs[3], 'k')})"
    )
    coeffs = ",".join(str(a) for a in c)
    parts = [f"{left} = {right} @ coeffs={coeffs}", f"expect={expect}"]
    if kgtn:
        parts.append("domain=k>n")
    parts.append(f'ref="{ref}"')
    return " ".join(parts)


def main():
    raw = build()
    seen = {}
    lines = []
    skipped = 0
    for ref, c, lhs, rhs, kgtn, expect in raw:
        key = (c, lhs, rhs, kgtn)
        if key in seen:
            if seen[key] != expect:
                raise SystemExit(f"conflicting expectations for {key}")
            skipped += 1
            continue
        seen[key] = expect
        cx = counterexample(c, lhs, rhs, kgtn, BOUND)
        ok = cx is None
        if ok != (expect == "pass"):
            raise SystemExit(
                f"oracle disagrees with {ref} {c} {lhs}={rhs}: cx={cx} expect={expect}"
            )
        lines.append(fmt_line(ref, c, lhs, rhs, kgtn, expect))
    n_fail = sum(1 for ln in lines if "expect=fail" in ln)
    here = os.path.dirname(os.path.abspath(__file__))
    dest = os.path.join(here, "..", "src", "binomod2", "data", "corpus.txt")
    os.makedirs(os.path.dirname(dest), exist_ok=True)
    header = (
        "# Identity statement corpus. One statement per line:\n"
        "#   F(<pn+q>,<p'k+q'>) = 0|F(<un+v>,<u'k+v'>) @ coeffs=a1,a2,a3,a4"
        " expect=pass|fail [domain=k>n] ref=\"...\"\n"
        f"# Every line was certified against a Pascal-mod-2 oracle for all"
        f" 0 <= n,k <= {BOUND}\n"
        "# (expect=fail lines are known-wrong printed forms and controls;"
        " the oracle confirms they fail).\n"
    )
    with open(dest, "w") as fh:
        fh.write(header)
        fh.write("\n".join(lines) + "\n")
    print(
        f"wrote {len(lines)} statements ({n_fail} expect=fail) to {dest};"
        f" {skipped} duplicates dropped"
    )


if __name__ == "__main__":
    main()
