"""
Residues of the complex-cobordism exponential
=============================================

Over MU tensor Q the logarithm has derivative ``sum m_k u^k`` where
``m_k`` stands for the class of CP^k.  Substituting ``c = exp(z)`` into a
negative power of ``c`` and reading off the ``z^-1`` coefficient recovers
exactly those classes.
"""

from tatecalc import FGLContext, LaurentSeries, log_prime, mu_rational, ser_residue, to_additive_coordinate

ring = mu_rational()
ctx = FGLContext(ring, 8)

# The logarithm and exponential, printed to a few terms.
print("log  =", ctx.log.truncate(4).to_text())
print("exp  =", ctx.exp.truncate(4).to_text())

# res c^(-k-1) after the substitution: one generator per k.
for k in range(6):
    power = LaurentSeries.monomial(ring, "c", -k - 1, -1)
    print(f"res c^{-k - 1:<3}=", ser_residue(to_additive_coordinate(ctx, power)).to_text())

# Packaged as a generating function the residues are log'(u).
residues = {k: ser_residue(to_additive_coordinate(ctx, LaurentSeries.monomial(ring, "c", -k - 1, -1)))
            for k in range(9)}
assert LaurentSeries(ring, "u", 0, residues, 8) == log_prime(ctx)
print("generating function matches log'(u) through u^8")
