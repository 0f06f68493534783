"""Reynolds fingerprints of every built-in family at minimal parameters."""
from __future__ import annotations

import sys

from kuls import canonical_form, consistent_form, reynolds_sequence
from kuls.errors import NotSymmetric
from kuls.families import FamilySpec, family
from kuls.gf import GF
from kuls.rewriting import build_table, complete

MINIMAL = (
    ("A", {"p": 1, "q": 1}),
    ("Lambda", {"m": 2}),
    ("Gamma", {"n": 1}),
    ("Tpqr", {"p": 2, "q": 2, "r": 2}),
    ("Tpq", {"p": 1, "q": 1}),
    ("Tstar", {"r": 2}),
    ("Omega", {"n": 1}),
    ("N", {"n": 1, "m": 1}),
    ("D", {"m": 2}),
    ("Dprime", {"m": 2}),
)


def main() -> None:
    print(f"{'instance':>12}  {'dim':>4} {'Z':>3} {'K':>3} {'soc':>4}"
          f"  perp chain (n = 0, 1, ...)")
    for name, params in MINIMAL:
        spec = FamilySpec(name, params, GF(2))
        at = build_table(complete(family(spec)))
        try:
            form = canonical_form(at)
        except NotSymmetric:
            form = consistent_form(at)
            print(f"note: {spec.label()} uses a solved form", file=sys.stderr)
        rep = reynolds_sequence(at, form)
        chain = " -> ".join(str(r.dim_t_perp) for r in rep.rows)
        print(f"{spec.label():>12}  {rep.dim:>4} {rep.dim_center:>3}"
              f" {rep.dim_commutator:>3} {rep.dim_socle:>4}  {chain}"
              f"  (stable at {rep.stabilized_at})")


if __name__ == "__main__":
    main()
