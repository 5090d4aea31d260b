"""
Searching for a space without good planes
=========================================

For random 3D balls, the best plane found among a candidate pool gives an
upper bound on that ball's infimum; the running maximum is the worst seen.
"""

from hyperproj import explore_infimum

rep = explore_infimum(3, 20, seed=42)
for i, e in enumerate(rep.entries):
    print(i, len(e.ball.vertices), "vertices  best", e.lam, "over", e.candidates, "planes")
print("running max:", rep.best_upper_bound, " resampled:", rep.resampled)
