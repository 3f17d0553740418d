"""Solve for x_p, q_p, m_p, n_p and print them next to the published tables."""

import argparse

from legdet.registry import discover, get, has_unknown_at, moduli
from legdet.roster import PUBLISHED_TABLES


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=130, help="largest prime to solve at")
    ap.add_argument("--engine", default="auto")
    args = ap.parse_args()

    for ident_id, symbol in PUBLISHED_TABLES.items():
        ident = get(ident_id)
        print(f"{symbol} ({ident_id})")
        for p in moduli(5, args.max, True):
            if not has_unknown_at(ident, p):
                continue
            value = discover(ident, p, args.engine)
            pub = ident.published.get(p)
            mark = "" if pub is None else ("  ok" if pub == value else f"  published {pub}")
            print(f"  p={p:<4} {value}{mark}")


if __name__ == "__main__":
    main()
