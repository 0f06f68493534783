"""Separate Omega(n) from A(1,n): same coarse invariants, different T_1^perp."""
from __future__ import annotations

from kuls import canonical_form, compare, reynolds_sequence
from kuls.families import FamilySpec, family
from kuls.gf import GF
from kuls.rewriting import build_table, complete


def report(name: str, params: dict):
    at = build_table(complete(family(FamilySpec(name, params, GF(2)))))
    return reynolds_sequence(at, canonical_form(at))


def main() -> None:
    print("Omega(n) and A(1,n) share dim, dim Z, dim K and dim soc, so no")
    print("classical invariant separates them.  The Reynolds ideal chain does:")
    print()
    for n in range(1, 6):
        ra = report("Omega", {"n": n})
        rb = report("A", {"p": 1, "q": n})
        assert (ra.dim, ra.dim_center, ra.dim_socle) == (rb.dim, rb.dim_center, rb.dim_socle)
        verdict = compare(ra, rb)
        pa = [r.dim_t_perp for r in ra.rows]
        pb = [r.dim_t_perp for r in rb.rows]
        print(f"n = {n}: dim {ra.dim:3d}, center {ra.dim_center}, socle {ra.dim_socle};"
              f" perp dims {pa} vs {pb} -> {verdict.verdict} at n = {verdict.witness_n}")


if __name__ == "__main__":
    main()
