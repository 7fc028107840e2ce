#!/usr/bin/env python3
"""Scan bound-state energies on both solvable branches.

For every (n, L) in the requested window the script reports the
closed-form energy, the bisection result, and their relative gap.
With --fd it also runs the finite-difference oracle for L <= 1 and
columns the cross-check error.
"""

import argparse

from phasenu import (
    PhysicalParams,
    RadialGrid,
    closed_form_energy,
    fd_spectrum,
    perfect_square_alphadelta,
    solve_energy,
)
from phasenu.errors import GridTooCoarse


def scan_branch(alphadelta, n_max, L_max, want_fd, grid):
    print(f"branch alphadelta = {alphadelta:g}")
    header = f"{'n':>3} {'L':>3} {'E_closed':>16} {'E_bisect':>16} {'rel_gap':>10}"
    if want_fd:
        header += f" {'E_fd':>16} {'fd_rel':>10}"
    print(header)
    fd_cache = {}
    for L in range(L_max + 1):
        params = PhysicalParams(angular_momentum=L)
        if want_fd and L <= 1:
            try:
                fd_cache[L] = fd_spectrum(params, L, grid, n_states=n_max + 1)
            except GridTooCoarse as exc:
                print(f"  fd oracle unavailable for L={L}: {exc}")
        for n in range(n_max + 1):
            e_closed = closed_form_energy(params, n, alphadelta)
            e_bisect = solve_energy(params, n, alphadelta)
            gap = abs(e_bisect - e_closed) / abs(e_closed)
            line = f"{n:>3} {L:>3} {e_closed:>16.10f} {e_bisect:>16.10f} {gap:>10.2e}"
            if want_fd and L in fd_cache and alphadelta == -1.0:
                e_fd = fd_cache[L][n]
                line += f" {e_fd:>16.10f} {abs(e_fd - e_closed) / abs(e_closed):>10.2e}"
            print(line)
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--L-max", type=int, default=2)
    ap.add_argument("--fd", action="store_true", help="cross-check against the grid oracle")
    ap.add_argument("--grid", default="1e-3,100,4000", help="r_min,r_max,n_points for --fd")
    args = ap.parse_args()

    r_min, r_max, n_points = args.grid.split(",")
    grid = RadialGrid(float(r_min), float(r_max), int(n_points))

    for alphadelta in perfect_square_alphadelta():
        scan_branch(alphadelta, args.n_max, args.L_max, args.fd, grid)


if __name__ == "__main__":
    main()
