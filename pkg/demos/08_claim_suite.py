"""Running the registered claims and writing a JSON report."""

import json

from zetamono import bundled_zeros_path, run_suite
from zetamono.cli import report_json

records = run_suite(["all"], zeros_path=bundled_zeros_path())
for r in records:
    print(f"{'PASS' if r.passed else 'FAIL'}  {r.claim_id:22s} margin {r.worst_margin:+.4g}  {r.note}")

doc = json.loads(report_json(records, timing=False))
print(f"schema {doc['schema']}, {len(doc['records'])} records")
