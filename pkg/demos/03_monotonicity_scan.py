"""Sign scans of Re(f'/f) over rectangular grids.

The scan flags points where |f| is numerically zero, records every point
whose sign disagrees with the expectation, and re-checks a sample of rows
by comparing |f| directly between neighbouring sigma samples.
"""

import sys
import tempfile
from pathlib import Path

from zetamono import GridSpec, scan_monotonicity
from zetamono.cli import write_scan_csv

left = GridSpec(-15, 0, 0.1, 8, 100, 0.25, mirror_t=True)
for f in ("zeta", "eta", "xi"):
    rep = scan_monotonicity(f, left, -1)
    print(f"{f:4s} left region: {len(rep.violations)} violations, smallest margin {rep.worst_margin:.4f}")

# Right of the critical line |zeta| is not monotone: the scan finds witnesses.
right = GridSpec(0.51, 5, 0.05, 8, 50, 0.25)
rep = scan_monotonicity("zeta", right, -1)
print(f"zeta right of 1/2: {len(rep.violations)} points where |zeta| grows, e.g. {rep.witness}")

# |xi| increases for sigma >= 1.
rep = scan_monotonicity("xi", GridSpec(1, 10, 0.1, 0, 50, 0.25), +1)
out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.gettempdir()) / "xi_scan.csv"
write_scan_csv(out, rep)
print(f"xi right half: {len(rep.violations)} violations; CSV written to {out}")
