"""
Characters modulo k
===================

Characters are built from the unit group's generators, and every value is a
root of unity stored as an exact fraction of a turn.
"""

from lmeansq.characters import characters, conjugate, parity, unit_group

# (Z/20)^* splits as C2 x C4: -1 mod 4 and the primitive root 2 mod 5
g = unit_group(20)
print("generators and orders:", g.components)

# every character prints as its values chi(1..k), "a/e" meaning exp(2 pi i a/e)
for chi in characters(20):
    row = " ".join(f"{str(chi(m)):>4}" for m in range(1, 21))
    print(f"{chi.label():>4} {parity(chi):>4} order {chi.order}:  {row}")

# conjugation negates the index vector
chi = characters(20)[3]
print(chi.label(), "->", conjugate(chi).label())
