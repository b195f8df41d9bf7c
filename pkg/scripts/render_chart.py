"""Render the periodic chart in every supported format.

Writes chart.txt, chart.csv, chart.json and chart.html to the output
directory, plus chart_mirrored.txt with the row-degenerate layout (rows
keyed by n + l, blocks mirrored right to left).

Usage: python3 scripts/render_chart.py [--max-z 120] [--out out/charts]
"""

import argparse
from pathlib import Path

from so42pt.chart import build_chart, render


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-z", type=int, default=120)
    ap.add_argument("--out", type=Path, default=Path("out/charts"))
    args = ap.parse_args()

    chart = build_chart(args.max_z)
    args.out.mkdir(parents=True, exist_ok=True)
    for fmt, suffix in (("text", "txt"), ("csv", "csv"), ("json", "json"), ("html", "html")):
        path = args.out / f"chart.{suffix}"
        path.write_text(render(chart, format=fmt))
        print(f"wrote {path}")
    mirrored = args.out / "chart_mirrored.txt"
    mirrored.write_text(render(chart, format="text", scerri_like=True))
    print(f"wrote {mirrored}")
    print()
    print(render(chart, format="text"))


if __name__ == "__main__":
    main()
