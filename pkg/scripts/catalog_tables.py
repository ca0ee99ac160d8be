#!/usr/bin/env python3
"""Print the additive tables of a survey of catalog groups.

Usage: python scripts/catalog_tables.py [--max-degree D] [--field F]
"""

import argparse
import sys

from chowbg.cli import render_table
from chowbg.errors import UnsupportedError
from chowbg.fields import parse_field
from chowbg.groups import parse_group_expr
from chowbg.models import chow_model

SURVEY = [
    "1",
    "Z/2",
    "Z/3",
    "Z/4 x Z/2",
    "Gm",
    "GL(3)",
    "O(3)",
    "O(4)",
    "SO(5)",
    "Sp(4)",
    "S_2",
    "S_3",
    "wr(2, Z/2)",
    "wr(2, wr(2, 1))",
    "wr(3, Z/3)",
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-degree", type=int, default=8)
    parser.add_argument("--field", default="C")
    args = parser.parse_args()
    field = parse_field(args.field)
    for text in SURVEY:
        print(f"=== {text} ===")
        try:
            table = chow_model(parse_group_expr(text), field, args.max_degree)
        except UnsupportedError as exc:
            print(f"unsupported: {exc}")
        else:
            render_table(table, sys.stdout)
        print()


if __name__ == "__main__":
    main()
