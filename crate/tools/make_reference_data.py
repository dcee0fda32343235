#!/usr/bin/env python3
"""Regenerate the numerical reference data used by the test suites.

Requires mpmath. Subcommands:

  zeros    write the first-100 zero-ordinate fixture (12 fractional
           digits, matching the 1e-6 error budget of ingested tables)
  spots    print evaluation references: zeta(1/2), theta and Z with
           derivatives at the pinned heights, chi(25), Gram points
  counts   print zero counts at the calibration heights
  sums     print zero-sum references (partial, tail, total) at the
           pinned (t, cutoff) pairs
  all      everything above (default)

Printed values carry 25 significant digits so the constants hardcoded in
the Rust tests can be audited against an independent implementation.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import mpmath as mp

mp.mp.dps = 30

REPO_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_FIXTURE = REPO_ROOT / "crates" / "core" / "tests" / "data" / "zeros_first_100.txt"

THETA_SPOTS = [0.5, 3.7, 10.0, 25.0, 100.5, 1000.2, 10000.2, 100000.2]
Z_SPOTS = [3.7, 25.0, 100.5, 1000.2, 10000.2, 100000.2]
COUNT_HEIGHTS = [100, 1000, 10000]
GRAM_SEEDS = {0: 17.8, 1: 23.2, 2: 27.7, 3: 31.7, 4: 35.5}


def fmt(x) -> str:
    return mp.nstr(x, 25)


def first_zeros(n: int):
    return [mp.im(mp.zetazero(k)) for k in range(1, n + 1)]


def twelve_places(x) -> str:
    # the fixture carries the double-precision ordinates (the toolkit's
    # native width), rendered with the usual round-half-even rule
    return f"{float(mp.mpf(x)):.12f}"


def cmd_zeros(out: Path) -> None:
    ordinates = first_zeros(100)
    body = "".join(twelve_places(g) + "\n" for g in ordinates)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(body)
    print(f"wrote {len(ordinates)} ordinates to {out}")


def cmd_spots() -> None:
    print("zeta(1/2) =", fmt(mp.zeta(mp.mpf("0.5"))))
    print()
    for t in THETA_SPOTS:
        tt = mp.mpf(repr(t))
        ders = [mp.diff(mp.siegeltheta, tt, k) for k in range(3)]
        print(f"theta({t}) =", ", ".join(fmt(d) for d in ders))
    print()
    for t in Z_SPOTS:
        tt = mp.mpf(repr(t))
        ders = [mp.siegelz(tt, derivative=k) for k in range(3)]
        print(f"Z({t}), Z', Z'' =", ", ".join(fmt(d) for d in ders))
    print()
    chi25 = mp.expjpi(-2 * mp.siegeltheta(mp.mpf(25)) / mp.pi)
    print("chi(25) =", fmt(mp.re(chi25)), "+ i *", fmt(mp.im(chi25)))
    print()
    for n, seed in GRAM_SEEDS.items():
        g = mp.findroot(lambda x, n=n: mp.siegeltheta(x) - n * mp.pi, seed)
        print(f"gram({n}) =", fmt(g))
    print()
    print("exp(e) =", fmt(mp.exp(mp.e)))


def cmd_counts() -> None:
    for t in COUNT_HEIGHTS:
        print(f"count({t}) =", mp.nzeros(t))


def zero_sum_reference(t, cutoff):
    t = mp.mpf(t)
    cutoff = mp.mpf(cutoff)
    partial = mp.mpf(0)
    k = 1
    while True:
        g = mp.im(mp.zetazero(k))
        if g > cutoff:
            break
        partial += 1 / (t - g) ** 2 + 1 / (t + g) ** 2
        k += 1
    density = lambda u: mp.log(u / (2 * mp.pi)) / (2 * mp.pi)
    integrand = lambda u: density(u) * (1 / (t - u) ** 2 + 1 / (t + u) ** 2)
    tail = mp.quad(integrand, [cutoff, mp.inf])
    return partial, tail, partial + tail


def cmd_sums() -> None:
    gamma1 = mp.im(mp.zetazero(1))
    gamma2 = mp.im(mp.zetazero(2))
    midpoint = (gamma1 + gamma2) / 2
    print("midpoint(gamma1, gamma2) =", fmt(midpoint))
    for label, t, cutoff in [
        ("midpoint, cutoff 100", midpoint, 100),
        ("t=60.2, cutoff 200", mp.mpf("60.2"), 200),
    ]:
        partial, tail, total = zero_sum_reference(t, cutoff)
        print(f"zero_sum({label}): partial =", fmt(partial))
        print(f"zero_sum({label}): tail    =", fmt(tail))
        print(f"zero_sum({label}): total   =", fmt(total))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "task",
        nargs="?",
        default="all",
        choices=["zeros", "spots", "counts", "sums", "all"],
    )
    parser.add_argument(
        "--out",
        type=Path,
        default=DEFAULT_FIXTURE,
        help="fixture path for the zeros task",
    )
    args = parser.parse_args()
    if args.task in ("zeros", "all"):
        cmd_zeros(args.out)
    if args.task in ("spots", "all"):
        cmd_spots()
    if args.task in ("counts", "all"):
        cmd_counts()
    if args.task in ("sums", "all"):
        cmd_sums()


if __name__ == "__main__":
    main()
