"""
Loop words: parsing, evaluating, printing
=========================================

Text expressions over the generators evaluate to canonical coordinates,
and every element prints as a canonical word that parses back to itself.
"""

from caloop import NucleusKind, is_member, witness_noncentral
from caloop.words import evaluate, format_canonical, parse, parse_with_warnings

# Evaluation normalizes any bracketing of generator words.
for text in ["x*y", "(x*y)*x", "x*(x*y)", "assoc(x,x,y)", "inv(x*y)",
             "pow(x*y,2)", "innL(x,x,y)"]:
    value = evaluate(parse(text))
    print(f"{text:14s} -> {str(tuple(value)):34s} {format_canonical(value)}")

# Unparenthesized chains are legal but grouped to the left; the parser
# warns, because grouping changes the value in a nonassociative loop.
expr, warnings = parse_with_warnings("x*x*y")
print("\nx*x*y parses with warning:", warnings[0])
print("(x*x)*y =", tuple(evaluate(expr)), "but x*(x*y) =",
      tuple(evaluate(parse("x*(x*y)"))))

# Canonical forms round-trip: format -> parse -> evaluate is the identity.
from caloop import Elem8

element = Elem8((2, -3, 0, 4, 1, 0, -2, 5))
word = format_canonical(element)
print(f"\n{tuple(element)} prints as {word!r}")
print("round-trips:", evaluate(parse(word)) == element)

# Structural subloops via coordinates, with concrete witnesses on failure.
u1 = evaluate(parse("u1"))
print("\nu1 in the middle nucleus:", is_member(u1, NucleusKind.MIDDLE))
print("u1 in the center:", is_member(u1, NucleusKind.CENTER))
w = witness_noncentral(NucleusKind.CENTER, u1)
print(f"witness: slot={w.slot}, a={tuple(w.a)}, b={tuple(w.b)}, "
      f"associator={format_canonical(w.value)}")
