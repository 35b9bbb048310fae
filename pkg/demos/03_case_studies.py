"""Score the four bundled case-study questionnaires.

Each case is one organization's 17 answers. The cascade reduces each
category pairwise, then combines the three category scores into the
overall process assessment.
"""
from splmat import CASE_STUDY_ANSWERS, Questionnaire, assess
from splmat.assessment import ACTIVITIES, ACTIVITY_TITLES, display

for case, answers in CASE_STUDY_ANSWERS.items():
    report = assess(Questionnaire(dict(answers)))
    print(f"\n=== {case} ===")
    for name in ACTIVITIES:
        activity = report.activity(name)
        print(
            f"  {ACTIVITY_TITLES[name]:<42} {display(activity.score):>7}"
            f"  {activity.label}  (level {activity.level})"
        )

# The full chain of intermediate block outputs for the first case shows
# how answers flow through the cascade.
report = assess(Questionnaire(dict(CASE_STUDY_ANSWERS["case-1"])))
print("\ncase-1 intermediate blocks:")
for t in report.trace:
    print(f"  [{t.section:19s}] {t.node:<40} ({t.left:6.2f}, {t.right:6.2f}) -> {t.score:.4f}")
