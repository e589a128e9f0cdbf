"""Birkhoff and even-odd factorization of characters on rooted trees."""
from bchfactor.hopf import (
    birkhoff_decompose, character, character_from_json, compose_antipode, even_odd_decompose,
    format_tree, is_pole_free, trees_up_to,
)

D = 4
phi = character_from_json({
    "*": "eps^-1 + 1",
    "*[*]": "1/2*eps^-2 + eps^-1",
    "*[* *]": "1/3*eps^-3 - eps",
    "*[*[*]]": "1/6*eps^-3 + 2",
    "*[* * *]": "eps^-4",
    "*[* *[*]]": "eps^-2 - 1",
    "*[*[* *]]": "1/4*eps^-4",
    "*[*[*[*]]]": "1/24*eps^-4 + eps^-1",
}, D)

routes = {m: birkhoff_decompose(phi, method=m) for m in ("spitzer", "bogoliubov", "exponential")}
phi_minus, phi_plus = routes["spitzer"]
print("all three routes agree:", len({(str(a), str(b)) for a, b in routes.values()}) == 1)
print("phi = phi_-^{-1} * phi_+:", compose_antipode(phi_minus) * phi_plus == phi)
print("phi_+ pole free:", is_pole_free(phi_plus))
for t in trees_up_to(D):
    print(f"  {format_tree(t):12} phi_-: {phi_minus((t,))!s:28} phi_+: {phi_plus((t,))}")

psi = character({t: n + 1 for n, t in enumerate(trees_up_to(D))}, D)
odd, even = even_odd_decompose(psi)
print("\neven-odd split, psi = psi_- * psi_+:", odd * even == psi)
for t in trees_up_to(D):
    print(f"  {format_tree(t):12} psi_-: {odd((t,))!s:8} psi_+: {even((t,))}")
