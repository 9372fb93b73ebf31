"""Clock speed per unit energy grows linearly with the circuit size.

Runs the standard wavepacket experiment for both chain families over a
range of G and fits log-log slopes: the energy spread dE falls as G^-2
(standard chain) or G^-1 (linear-dispersion chain) while the clock
speed f_clock falls only as G^-1 (or stays constant), so the
speed-per-energy ratios grow like G.  Set CLOCKSIM_WORKERS to
parallelize the rows.

Run:  python3 demos/scaling_sweep.py [G1,G2,...]
"""

import sys

from clocksim import clock_speed_ratio_sweep


def main() -> None:
    gs = (
        [int(v) for v in sys.argv[1].split(",")]
        if len(sys.argv) > 1
        else [50, 100, 200, 400]
    )
    for family in ("fk", "lin"):
        rows, slopes = clock_speed_ratio_sweep(family, gs, samples=101)
        print(f"\n{family} chain:")
        print(f"  {'G':>6} {'dE':>12} {'f_clock':>10} {'f/dE':>10} {'L':>10}")
        for row in rows:
            print(
                f"  {row['G']:>6} {row['E_std']:>12.6f} {row['f_clock']:>10.4f} "
                f"{row['ratio_dE']:>10.3f} {row['L']:>10.4f}"
            )
        for name, slope in slopes.items():
            if slope is not None:
                print(f"  {name} = {slope:+.4f}")


if __name__ == "__main__":
    main()
