"""Reliability analysis of a synthetic multi-respondent survey.

With raw respondent data in hand you can check the questionnaire itself:
coefficient alpha for internal consistency, and the correlation-matrix
spectrum (eigenvalues above one retained) for construct validity.
"""
import numpy as np

from splmat import (
    ResponseMatrix,
    correlation_matrix,
    cronbach_alpha,
    eigenvalues_symmetric,
)

rng = np.random.default_rng(42)
items = tuple(f"q{i}" for i in range(1, 18))

# Build 40 synthetic respondents around three latent factors, mirroring
# the three questionnaire categories.
factors = rng.normal(size=(40, 3))
loadings = np.zeros((3, 17))
loadings[0, 0:5] = 1.0    # core asset items
loadings[1, 5:10] = 1.0   # product development items
loadings[2, 10:17] = 1.0  # management items
scores = 25.0 + 8.0 * factors @ loadings + 4.0 * rng.normal(size=(40, 17))
matrix = ResponseMatrix(np.clip(scores, 0.0, 50.0), items)

alpha = cronbach_alpha(matrix)
print(f"coefficient alpha: {alpha:.3f}")

report = eigenvalues_symmetric(correlation_matrix(matrix))
print(f"eigenvalue sum (= item count): {sum(report.eigenvalues):.6f}")
print(f"retained by the above-one rule: {len(report.retained)}")
print("scree series (first eight):")
for index, value in report.scree[:8]:
    bar = "#" * int(round(value * 10))
    print(f"  {index:2d}  {value:6.3f}  {bar}")
print("\nThree dominant components match the three planted factors.")
