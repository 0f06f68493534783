"""Cross-check the semilinear T_n computation by exhaustive enumeration."""
from __future__ import annotations

import time

from kuls import brute_force_kuelshammer, kuelshammer_space
from kuls.families import FamilySpec, family
from kuls.gf import GF
from kuls.rewriting import build_table, complete

SMALL = (
    ("Omega", {"n": 1}),
    ("Omega", {"n": 2}),
    ("A", {"p": 1, "q": 1}),
    ("A", {"p": 1, "q": 2}),
    ("N", {"n": 1, "m": 2}),
    ("N", {"n": 2, "m": 1}),
    ("N", {"n": 2, "m": 2}),
    ("D", {"m": 2}),
)


def main() -> None:
    for name, params in SMALL:
        spec = FamilySpec(name, params, GF(2))
        at = build_table(complete(family(spec)))
        for n in (1, 2):
            start = time.perf_counter()
            brute = brute_force_kuelshammer(at, n)
            elapsed = time.perf_counter() - start
            linear = kuelshammer_space(at, n)
            tag = "agree" if brute == linear else "DISAGREE"
            print(f"{spec.label():>10} T_{n}: dim {linear.dim:2d} {tag}"
                  f"  ({at.gf.q}^{at.dim} vectors in {elapsed:.3f}s)")


if __name__ == "__main__":
    main()
