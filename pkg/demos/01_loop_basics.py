"""
A first walk through the loop
=============================

Elements are 8-tuples of integer exponents; multiplication is exact and
commutative but deliberately NOT associative.
"""

from caloop import IDENTITY, U1, X, Y, Elem8, associator

# The two free generators and a product.  Coordinates read as exponents of
# (x, y, u1, u2, v1, v2, v3, v4) in the canonical word.
print("x     =", tuple(X))
print("y     =", tuple(Y))
print("x*y   =", tuple(X * Y))
print("y*x   =", tuple(Y * X), "(commutative)")

# Associativity fails: the two ways to multiply x, x, y differ.
left = (X * X) * Y
right = X * (X * Y)
print("\n(x*x)*y =", tuple(left))
print("x*(x*y) =", tuple(right))

# The mismatch is measured by the associator (x, x, y), which is the
# canonical generator u1 sitting in coordinate 3.
print("associator(x, x, y) =", tuple(associator(X, X, Y)), "== u1:",
      associator(X, X, Y) == U1)

# Division is exact and total: a \ (a*b) recovers b for any coordinates.
a = Elem8((3, -1, 4, 1, -5, 9, 2, -6))
b = Elem8((-2, 7, 1, -8, 2, 8, -1, 8))
print("\nround trip a\\(a*b) == b:", a.left_divide(a * b) == b)
print("a * a^-1 ==", tuple(a * a.inverse()), "== identity:",
      a * a.inverse() == IDENTITY)

# Inverses distribute over products (the automorphic inverse property).
print("(a*b)^-1 == a^-1 * b^-1:", (a * b).inverse() == a.inverse() * b.inverse())

# Powers live in a group: exponents on a single element just add.
print("\nx^5      =", tuple(X ** 5))
print("a^3 * a^-3 == identity:", (a ** 3) * (a ** -3) == IDENTITY)

# The six basis elements beyond x, y are associators of earlier ones:
from caloop import basis

for i, (u, v, w) in enumerate(
    [(1, 1, 2), (1, 2, 2), (1, 1, 3), (1, 1, 4), (2, 2, 3), (2, 2, 4)], start=3
):
    got = associator(basis(u), basis(v), basis(w))
    print(f"assoc(e{u}, e{v}, e{w}) = e{i}:", got == basis(i))
