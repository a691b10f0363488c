"""
Reconstructing a class from its boundary moments
================================================

In the unoriented ring we work with Laurent series in ``w``.  The boundary
functional sends ``w^(-k-1)`` to the class of RP^k (zero for odd k).  The
Boardman transform uses those moments to build a power series, and it does
nothing to an input that is already holomorphic.
"""

from tatecalc import (
    TateModel,
    boardman_by_projection,
    boardman_transform,
    is_holomorphic,
    moments_of,
    n_mod2,
    p_star_del,
    reconstruct_from_moments,
)

ring = n_mod2()
model = TateModel(ring, 6)
print("pi     =", model.pi.to_text())
print("pi^-1  =", model.pi_inverse.to_text())

# Moments of the principal monomials are the projective-space classes.
for k in range(7):
    print(f"p*d(w^{-k - 1}) =", p_star_del(model, model.monomial(-k - 1)).to_text())

# The transform of w^-1, a pure boundary term.
tail = model.monomial(-1)
B = boardman_transform(model, tail)
print("B(w^-1) =", B.to_text())
print("w^-1 holomorphic?", bool(is_holomorphic(model, tail)))

# Two other routes lead to the same answer: the split pi^-1 hol(L pi),
# and feeding the moment sequence back in.
assert B == boardman_by_projection(model, tail)
assert B == reconstruct_from_moments(model, moments_of(model, tail))

# A holomorphic class comes back unchanged.
S = model.series({0: ring.gen("x2"), 2: ring.gen("x4")}, 2, order=6)
assert boardman_transform(model, S) == S
print("B fixes", S.to_text())
