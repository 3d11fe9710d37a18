#!/usr/bin/env python3
"""The seven stabilizer sets, on the bundled fixtures.

Run:  python3 demos/02_stabilizers.py
"""

from mtlstab import (
    emit_report,
    from_labels,
    generated_filter,
    impl_left,
    mult_left,
    stabilizer_suite,
)
from mtlstab.fixtures import load_fixture

a4 = load_fixture("a4")
X = from_labels(a4, "b")

print("=" * 72)
print("All seven stabilizer sets of X={b} on the four-element chain a4")
print("=" * 72)
print(emit_report(stabilizer_suite(a4, X)))
print("impl_left and impl_right differ, and impl_right={a,1} is not a")
print("filter here (a*a=0 escapes it): the operators are genuinely")
print("one-sided on general algebras.")

print()
print("=" * 72)
print("Stabilizers do not see filter generation the same way on both sides")
print("=" * 72)
a5 = load_fixture("a5")
Xb = from_labels(a5, "b")
print("a5, X={b}:")
print("  impl_left(X)           =", impl_left(a5, Xb).render())
print("  impl_left(<X>)         =",
      impl_left(a5, generated_filter(a5, Xb)).render())
print("(b is idempotent in a5, so <X>={b,1} and the two agree;")
print(" the right-hand operators are provably blind to generation.)")

b4 = load_fixture("b4")
Xb4 = from_labels(b4, "b")
print("\nb4, X={b}:")
print("  mult_left(X)           =", mult_left(b4, Xb4).render())
print("  mult_left(<X>)         =",
      mult_left(b4, generated_filter(b4, Xb4)).render())
print("(multiplicative left stabilizers do change: t*1=1 forces t=1.)")

print()
print("=" * 72)
print("A set whose two-sided multiplicative stabilizer is empty")
print("=" * 72)
print(emit_report(stabilizer_suite(a4, from_labels(a4, "a,b"))))
print("Empty outputs are legal; empty inputs are rejected.")
