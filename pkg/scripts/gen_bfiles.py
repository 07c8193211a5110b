"""Generate the offline b-file fixtures under src/binomod2/data/bfiles/.

Every sequence here is produced from its own closed form or textbook
recurrence, written without importing the package, so the fixtures stay an
independent cross-check of the library. File format matches oeis.org
b-files: one "index value" pair per line.

Run from the repository root:  python3 scripts/gen_bfiles.py
"""

import math
import os

N_TRANSFORM = 2048  # indices 0 .. N_TRANSFORM-1
N_BASE = 101


def fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def run_lengths(n: int) -> list[int]:
    return [len(b) for b in bin(n)[2:].split("0") if b]


def pair_count(n: int) -> int:
    """Occurrences of '11' in the binary expansion."""
    return sum(1 for i in range(n.bit_length()) if (n >> i) & 3 == 3)


# Pascal triangle mod 2, rows as bit masks
_ROWS = [1]


def _comb_odd(x: int, y: int) -> int:
    if y < 0 or y > x:
        return 0
    while len(_ROWS) <= x:
        _ROWS.append(_ROWS[-1] ^ (_ROWS[-1] << 1))
    return (_ROWS[x] >> y) & 1


def odd_central_sum(n: int) -> int:
    """Number of k with C(n+k, 2k) * C(n, k) odd."""
    return sum(_comb_odd(n + k, 2 * k) & _comb_odd(n, k) for k in range(n + 1))


def lucas_number(n: int) -> int:
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def narayana(count: int) -> list[int]:
    vals = [1, 1, 1]
    while len(vals) < count:
        vals.append(vals[-1] + vals[-3])
    return vals[:count]


TRANSFORMS = {
    # transform-of-base sequences, >= 1000 terms each
    "A001316": lambda n: 1 << bin(n).count("1"),
    "A246028": lambda n: math.prod(fib(L + 1) for L in run_lengths(n)),
    "A245564": lambda n: math.prod(fib(L + 2) for L in run_lengths(n)),
    "A245195": lambda n: 1 << pair_count(n),
    "A106737": odd_central_sum,
    "A000012": lambda n: 1,
}

# base sequences: (first index, list of values)
BASES = {
    "A000079": (0, [1 << n for n in range(N_BASE)]),
    "A000045": (0, [fib(n) for n in range(N_BASE)]),
    "A011782": (0, [1] + [1 << (n - 1) for n in range(1, N_BASE)]),
    "A040000": (0, [1] + [2] * (N_BASE - 1)),
    "A000027": (1, list(range(1, N_BASE + 1))),
    "A000930": (0, narayana(N_BASE)),
    "A008619": (0, [n // 2 + 1 for n in range(N_BASE)]),
    "A000032": (0, [lucas_number(n) for n in range(N_BASE)]),
}


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    dest = os.path.join(here, "..", "src", "binomod2", "data", "bfiles")
    os.makedirs(dest, exist_ok=True)
    for aid, fn in TRANSFORMS.items():
        lines = [f"{n} {fn(n)}" for n in range(N_TRANSFORM)]
        path = os.path.join(dest, f"{aid}.txt")
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"{aid}: {len(lines)} terms")
    for aid, (start, vals) in BASES.items():
        lines = [f"{start + i} {v}" for i, v in enumerate(vals)]
        path = os.path.join(dest, f"{aid}.txt")
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"{aid}: {len(lines)} terms from index {start}")


if __name__ == "__main__":
    main()
