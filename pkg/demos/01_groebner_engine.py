"""Tour of the exact Groebner engine.

Build a few polynomials over Q and F_32003, divide, form S-polynomials,
compute a reduced basis and decide ideal membership.
"""

from olmcheck import GRLEX, LEX, QQ, Ring, buchberger, multivariate_division, s_polynomial

# A lex ring with x > y; the classic division example.
R = Ring(["x", "y"], QQ, LEX)
x, y = R.gens()
f = x**2 * y + x * y**2 + y**2
divisors = [x * y - 1, y**2 - 1]
res = multivariate_division(f, divisors)
print("dividend :", f)
print("quotients:", [str(q) for q in res.quotients])
print("remainder:", res.remainder)
assert res.recombine(divisors) == f

# S-polynomials cancel leading terms.
G = Ring(["x", "y"], QQ, GRLEX)
x, y = G.gens()
print("\nS(x^3 - 2xy, x^2 y - 2y^2 + x) =",
      s_polynomial(x**3 - 2 * x * y, x**2 * y - 2 * y**2 + x))

# The twisted cubic: eliminate the parameter by a lex basis.
T = Ring(["z", "y", "x"], QQ, LEX)
z, y, x = T.gens()
gb = buchberger([y - x**2, z - x**3])
print("\nreduced basis of the twisted cubic ideal (lex z > y > x):")
for p in gb:
    print("  ", p)
print("x*z - y^2 is a member:", gb.contains(x * z - y**2))
print("x alone is a member  :", gb.contains(x))
