#!/usr/bin/env python3
"""Sweep every admissible endpoint on small equal-moduli tori.

For each (m, k) within the budget, constructs and verifies a certified
hamiltonian path from 0 to every vertex v with sum(v) = -1 (mod m), and
prints a per-configuration timing table.  Exits nonzero on any failure.
"""

import argparse
import sys
import time

from torusham import PathCertificate, TorusSpec, hamiltonian_path


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=4096)
    parser.add_argument("--k-min", type=int, default=3)
    parser.add_argument("--k-max", type=int, default=5)
    parser.add_argument("--m-max", type=int, default=9)
    args = parser.parse_args()

    print(f"{'m':>3} {'k':>3} {'targets':>8} {'seconds':>8}")
    total_targets = 0
    bad = 0
    t_start = time.perf_counter()
    for k in range(args.k_min, args.k_max + 1):
        for m in range(2, args.m_max + 1):
            if m**k > args.max_vertices:
                continue
            spec = TorusSpec.power(m, k)
            t0 = time.perf_counter()
            count = 0
            for v in spec.vertices():
                if sum(v) % m != m - 1:
                    continue
                got = hamiltonian_path(m, k, spec.zero(), v)
                ok = (
                    isinstance(got, PathCertificate)
                    and got.verified
                    and got.length == m**k - 1
                )
                if not ok:
                    bad += 1
                    print(f"FAILED: m={m} k={k} target={v}", file=sys.stderr)
                count += 1
            total_targets += count
            print(f"{m:>3} {k:>3} {count:>8} {time.perf_counter() - t0:>8.2f}")
    print(f"total: {total_targets} targets in {time.perf_counter() - t_start:.2f}s, {bad} failures")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
