"""Walk through the answer and maturity scales and their trapezoid terms.

Every questionnaire answer lives on a 0..50 scale carved into three
overlapping answer terms (No / Partial / Yes); block outputs live on the
same scale carved into five maturity terms (Very Low .. Very High).
"""
import numpy as np

from splmat import make_input_variable, make_output_variable

input_var = make_input_variable()
output_var = make_output_variable()

print("Answer terms (trapezoids as breakpoints):")
for name, fset in input_var.terms.items():
    print(f"  {name:8s} {fset.breakpoints}")

print("\nMaturity terms:")
for name, fset in output_var.terms.items():
    print(f"  {name:10s} {fset.breakpoints}")

# A few sample answers and how they fuzzify. 19 sits exactly on the
# crossover between No and Partial; 35 leans Yes but keeps some Partial.
for x in (5.0, 19.0, 27.5, 35.0, 45.0):
    degrees = input_var.fuzzify(x)
    pretty = ", ".join(f"{k}={v:.2f}" for k, v in degrees.items() if v > 0)
    print(f"\nanswer {x:>5}: {pretty}")

# The three answer terms always cover the scale: no score falls through.
xs = np.arange(0.0, 50.001, 0.01)
envelope = np.zeros_like(xs)
for fset in input_var.terms.values():
    xp = [x for x, _ in fset.breakpoints]
    fp = [mu for _, mu in fset.breakpoints]
    envelope = np.maximum(envelope, np.interp(xs, xp, fp))
print(f"\ncoverage: min of max-membership over the scale = {envelope.min():.3f} (> 0)")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(2, 1, figsize=(8, 6), sharex=True)
    for ax, var, title in (
        (axes[0], input_var, "answer terms"),
        (axes[1], output_var, "maturity terms"),
    ):
        for name, fset in var.terms.items():
            xp = [x for x, _ in fset.breakpoints]
            fp = [mu for _, mu in fset.breakpoints]
            ax.plot(xs, np.interp(xs, xp, fp), label=name)
        ax.set_ylabel("membership")
        ax.set_title(title)
        ax.legend(loc="center right", fontsize=8)
    axes[1].set_xlabel("score")
    fig.tight_layout()
    fig.savefig("membership_functions.png", dpi=120)
    print("wrote membership_functions.png")
except ImportError:
    print("matplotlib not available; skipping the plot")
