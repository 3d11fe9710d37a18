#!/usr/bin/env python3
"""Class predicates, stabilizer characterizations, and the claim registry.

Run:  python3 demos/03_claims_and_classes.py
"""

from mtlstab import emit_report
from mtlstab.claims import (
    claim_ids,
    documented_divergences,
    outcome_report,
    verify_all,
)
from mtlstab.classify import classify
from mtlstab.fixtures import load_fixture

print("=" * 72)
print("Classifying the six-element involutive chain i6")
print("=" * 72)
i6 = load_fixture("i6")
print(emit_report(classify(i6)))
print("The direct involution scan and the stabilizer route agree, and the")
print("left stabilizer of bot collapses to {1} exactly as the class")
print("characterization demands.")

print()
print("=" * 72)
print(f"Running all {len(claim_ids())} registry claims against a4")
print("=" * 72)
a4 = load_fixture("a4")
outcomes = verify_all(a4)
for o in outcomes:
    if o.verdict != "holds":
        extra = f"  witness: {o.witness}" if o.witness else ""
        print(f"  {o.claim:<24} {o.verdict}{extra}")
holds = sum(o.verdict == "holds" for o in outcomes)
print(f"  ... plus {holds} claims that hold.")
print()
print("The two refutations are expected and carry witnesses: the right")
print("multiplicative stabilizer of {top} is the whole carrier, and the")
print("two-sided multiplicative stabilizer does not return its argument.")

print()
print("=" * 72)
print("Documented divergences (pointwise vs universally quantified reading)")
print("=" * 72)
report = outcome_report([], documented_divergences(a4))
print(emit_report(report))
c5 = load_fixture("c5")
print(emit_report(outcome_report([], documented_divergences(c5))))
