"""Convexity of |xi(1/2 + y + ix)|^2 in y."""

import numpy as np

from zetamono import check_polya_convexity
from zetamono.verification import polya_second_differences

rec = check_polya_convexity((0, 30), (-3, 3), (0.25, 0.05))
print(f"x in [0, 30], y in [-3, 3]: passed={rec.passed}, smallest scaled second difference {rec.worst_margin - 1e-8:.3e}")

y = np.arange(-1, 1.001, 0.5)
d2, d1 = polya_second_differences(np.array([0.0, 14.134725, 20.0]), y)
print("scaled second differences (rows x = 0, first zero, 20):")
print(np.array2string(d2, precision=3))
