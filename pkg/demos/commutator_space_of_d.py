"""The commutator spaces of D(m) and Dprime(m) disagree on alpha^2."""
from __future__ import annotations

from kuls import commutator_space, normal_form
from kuls.families import FamilySpec, family
from kuls.gf import GF
from kuls.linalg import contains
from kuls.rewriting import build_table, complete


def socle_word(m: int, j: int) -> str:
    # s_j = b_j..b_m a1 b_1..b_(j-1), the socle cycle based at vertex j
    names = [f"b{i}" for i in range(j, m + 1)] + ["a1"] + [f"b{i}" for i in range(1, j)]
    return "*".join(names)


def main() -> None:
    for m in (2, 3):
        d = build_table(complete(family(FamilySpec("D", {"m": m}, GF(2)))))
        dp = build_table(complete(family(FamilySpec("Dprime", {"m": m}, GF(2)))))
        k = commutator_space(d)
        print(f"m = {m}: dim K(D) = {k.dim} = dim D - ({m} + 2)")
        alpha2 = normal_form(d, "a1*a1")
        alpha3 = normal_form(d, "a1*a1*a1")
        for j in range(2, m + 1):
            diff = d.gf.sub(alpha2, normal_form(d, socle_word(m, j)))
            print(f"  a1*a1 - s_{j} in K(D): {contains(k, diff)}")
        tail = d.gf.sub(normal_form(d, socle_word(m, m)), alpha3)
        print(f"  s_{m} - a1*a1*a1 in K(D): {contains(k, tail)}")
        print(f"  a1*a1 in K(D):      {contains(k, alpha2)}")
        print(f"  a1*a1 in K(Dprime): {contains(commutator_space(dp), normal_form(dp, 'a1*a1'))}")
        print()


if __name__ == "__main__":
    main()
