"""One two-input fuzzy block, traced end to end.

A block takes two crisp scores, fires the nine rules, clips each fired
conclusion at its strength, unions the clipped sets, and returns the
centroid of the union.
"""
from splmat import centroid, default_rule_base, evaluate_block, infer
from splmat.rules import INPUT_1, INPUT_2

rb = default_rule_base()

print("Rule base (9 rules):")
for rule in rb.rules:
    t1 = rule.antecedent_term(INPUT_1)
    t2 = rule.antecedent_term(INPUT_2)
    print(f"  if input_1 is {t1:7s} and input_2 is {t2:7s} -> {rule.conclusion.term}")

for x1, x2 in ((45.0, 45.0), (17.5, 45.0), (19.0, 19.0), (40.0, 10.0)):
    aggregate, trace = infer(rb, x1, x2)
    print(f"\ninputs ({x1}, {x2}):")
    for record in trace:
        rule = rb.rules[record.index]
        print(
            f"  rule {record.index}: "
            f"{rule.antecedent_term(INPUT_1)}/{rule.antecedent_term(INPUT_2)}"
            f" -> {rule.conclusion.term} fired at {record.strength:.3f}"
        )
    print(f"  aggregate breakpoints: {aggregate.breakpoints}")
    print(f"  centroid = {centroid(aggregate):.4f}")

# evaluate_block is the one-call version of the same pipeline, and it is
# symmetric in its inputs.
print("\nevaluate_block(17.5, 45) =", evaluate_block(17.5, 45.0))
print("evaluate_block(45, 17.5) =", evaluate_block(45.0, 17.5))
