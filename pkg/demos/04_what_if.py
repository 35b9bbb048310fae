"""What-if analysis: which category is worth improving first?

Case 1's weakest activity is management. Pushing its seven answers to a
solid 40 lifts the overall assessment two levels; the same effort spent
on the already-strong core assets barely moves it.
"""
from splmat import CASE_STUDY_ANSWERS, Questionnaire, whatif
from splmat.assessment import ACTIVITIES, display

base = Questionnaire(dict(CASE_STUDY_ANSWERS["case-1"]))

scenarios = {
    "raise management answers to 40": {f"q{i}": 40.0 for i in range(11, 18)},
    "raise core-asset answers to 40": {f"q{i}": 40.0 for i in range(1, 6)},
    "no changes": {},
}

for title, overrides in scenarios.items():
    result = whatif(base, overrides)
    print(f"\n--- {title} ---")
    for name in ACTIVITIES:
        before = result.base.activity(name)
        after = result.modified.activity(name)
        delta = result.deltas[name]
        print(
            f"  {name:<20} {display(before.score):>7} -> {display(after.score):>7}"
            f"  (delta {delta:+.2f})  {after.label}"
        )
