"""Print the 28 penalty matrices and check the regime count by brute force."""

from erastar.penalty import default_tables, discover_regimes, format_tables

if __name__ == "__main__":
    print(format_tables(default_tables()))
    groups = discover_regimes(20)
    print(f"\ndistinct 8-move penalty vectors for |dx|,|dy| <= 20: {len(groups)}")
