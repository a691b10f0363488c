"""
A formal group law from its logarithm
=====================================

``F(x, y) = exp(log x + log y)`` computed exactly to total degree 4, then
checked for the group-law axioms.
"""

from tatecalc import FGLContext, group_law, group_law_checks, mu_rational

ctx = FGLContext(mu_rational(), 6)

F = group_law(ctx, 4)
print("F(x, y) =", F.to_text())

# The xy coefficient is -m1; the higher ones mix several generators.
print("coefficient of x*y:", F.coefficient(1, 1).to_text())
print("coefficient of x^2*y^2:", F.coefficient(2, 2).to_text())

print(group_law_checks(ctx, 6))
