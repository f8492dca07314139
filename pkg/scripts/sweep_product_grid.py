#!/usr/bin/env python3
"""Sweep the three product-expansion variants over a shift grid.

Verifies tags 2.1, 2.2, and 2.3 in exact arithmetic for every
(i, j) in {0..i_max} x {0..j_max} at the given rational parameters,
then writes one CSV and one JSON report bundle.

Usage:
    python3 scripts/sweep_product_grid.py --alpha 3/7 --beta 2/5 \
        --i-max 4 --j-max 4 --out-dir results
"""

import argparse
import json
from pathlib import Path

from hypident.identities import IdentityParams
from hypident.rationals import parse_rational
from hypident.reports import reports_to_csv
from hypident.verify import verify_identity

PRODUCT_TAGS = ("2.1", "2.2", "2.3")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--alpha", default="3/7", help="first rational parameter")
    parser.add_argument("--beta", default="2/5", help="second rational parameter")
    parser.add_argument("--i-max", type=int, default=4, help="largest first shift")
    parser.add_argument("--j-max", type=int, default=4, help="largest second shift")
    parser.add_argument("--degree", type=int, default=None,
                        help="truncation cap (default 2*(i+j)+16 per point)")
    parser.add_argument("--with-floats", action="store_true",
                        help="also cross-check each point at the default float samples")
    parser.add_argument("--out-dir", type=Path, default=Path("results"),
                        help="directory for grid.csv and grid.json (default results/)")
    args = parser.parse_args()

    alpha = parse_rational(args.alpha)
    beta = parse_rational(args.beta)
    float_points = None if args.with_floats else ()

    reports = []
    for tag in PRODUCT_TAGS:
        for i in range(args.i_max + 1):
            for j in range(args.j_max + 1):
                params = IdentityParams(alpha=alpha, beta=beta, i=i, j=j, cap=args.degree)
                kwargs = {} if float_points is None else {"float_points": float_points}
                report = verify_identity(tag, params, **kwargs)
                reports.append(report)
                print(report.summary_line())

    args.out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = args.out_dir / "grid.csv"
    json_path = args.out_dir / "grid.json"
    csv_path.write_text(reports_to_csv(reports))
    json_path.write_text(json.dumps([r.to_json_dict() for r in reports], indent=2) + "\n")

    passed = sum(1 for r in reports if r.passed)
    print(f"{passed}/{len(reports)} grid points passed")
    print(f"wrote {csv_path} and {json_path}")
    return 0 if passed == len(reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
