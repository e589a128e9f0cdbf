"""Symbolic BCH series, the chi recursion and the Magnus expansion in the free operated algebra."""
from bchfactor import ChiVariant, FreeOperated, bch, chi, format_lie, magnus_omega
from bchfactor.operators import formal_p_operator

A = FreeOperated("x y", order=5)
x, y = A.gens
print("BCH(x, y):")
for degree, part in sorted(bch(x, y).components().items()):
    print(f"  degree {degree}: {format_lie(part)}")

B = FreeOperated("a", order=4)
P = formal_p_operator()
print("\nchi(a) with a formal operator P:")
for degree, part in sorted(chi(B["a"], P).components().items()):
    print(f"  degree {degree}: {format_lie(part)}")

P0 = formal_p_operator(weight=0)
print("\nchi_0(a) for weight zero:")
for degree, part in sorted(chi(B["a"], P0, ChiVariant.WEIGHT_ZERO, theta=0).components().items()):
    print(f"  degree {degree}: {format_lie(part)}")
print(f"\nOmega[a] = {format_lie(magnus_omega(B['a'], P0))}")
