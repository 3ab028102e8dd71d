"""The query language: parse, evaluate, print.

A small expression language glues the engine together: let-bindings build
monoids (finitely generated literals, cyclic monoids, named families, and
internal sums with +), and queries ask for atoms, factorization sets,
length sets, membership, divisibility, maximal common divisors, or a
property report.  The same language drives `puiseux eval` and the REPL.
"""

from puiseux import Evaluator, NeedsBoundError, parse, print_program, render

program = """
# the running example: <2,3> extended by 3/4
let M = pm(2, 3);
let S = M + cyclic(3/4);
atoms(S);
Z(S, 5);
mcd(S, 2, 4)
"""

# Parsing yields statements; the canonical printer round-trips them.
stmts = parse(program)
print(print_program(stmts))
assert parse(print_program(stmts)) == stmts

# Evaluation returns one value per query.
for stmt, value in Evaluator().run(stmts):
    print("--", print_program([stmt]))
    print(render(value))

# Families are first-class: truncate with K=..., window with window=...,
# or use the exact window-free searches where they exist.
ev = Evaluator()
for line in (
    "atoms(family(grams, K=3))",
    "Zl(family(exAexB, window=5), 2, 2)",
    "Z(family(interval1) + family(sqden), 9/8)",
    "member(family(interval1) + family(sqden), 9/8)",
    "Zl(family(interval1, den_bound=4), 3, 2)",
):
    (stmt, value), = ev.run_text(line)
    print("--", line)
    print(render(value))

# Queries that would need a bound fail loudly instead of guessing one.
try:
    ev.run_text("Z(family(grams), 1/6)")
except NeedsBoundError as err:
    print("loud failure:", err)

# JSON mode emits the stable wire schemas used by the command line.
(stmt, value), = ev.run_text("Z(pm(2,3), 6)")
print(render(value, json_mode=True))
