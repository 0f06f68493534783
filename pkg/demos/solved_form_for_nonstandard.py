"""Why D(m) needs a solved symmetrizing form in characteristic 2."""
from __future__ import annotations

from kuls import canonical_form, consistent_form, reynolds_sequence
from kuls.errors import NotSymmetric
from kuls.families import FamilySpec, family
from kuls.gf import GF
from kuls.rewriting import build_table, complete


def main() -> None:
    at = build_table(complete(family(FamilySpec("D", {"m": 2}, GF(2)))))
    print("D(2) over GF(2): try the 0/1 socle prescription first.")
    try:
        canonical_form(at)
    except NotSymmetric as exc:
        print(f"  rejected: {exc}")
    print()
    print("The commutator space ties a1*a1 to a socle word, so psi(a1*a1) = 1")
    print("is forced.  Solving psi(K) = 0, psi(socle words) = 1 instead:")
    form = consistent_form(at)
    support = [at.word_name(i) for i, c in enumerate(form.psi) if c]
    print(f"  psi is 1 exactly on {support}")
    print()
    rep = reynolds_sequence(at, form)
    chain = " -> ".join(str(r.dim_t_perp) for r in rep.rows)
    print(f"Reynolds chain of D(2): {chain}; any valid form gives the same dims.")


if __name__ == "__main__":
    main()
