"""Export the pattern-side and tableau-side crystal graphs of one shape as DOT.

The two files render the same directed graph under the natural bijection;
diff the edge lists after relabeling to see the isomorphism at work.

Run:  python scripts/export_twin_graphs.py -n 3 -l 3,1,0 --out-dir graphs
"""

import argparse
import contextlib
import io
import pathlib

from gtcrystal.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", type=int, default=3)
    parser.add_argument("-l", "--shape", default="3,1,0")
    parser.add_argument("--out-dir", default="graphs")
    args = parser.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for model in ("gtp", "ssyt"):
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = cli_main(["graph", "-n", str(args.n), "-l", args.shape, "--model", model])
        if code != 0:
            raise SystemExit(code)
        target = out / f"{model}_{args.shape.replace(',', '_')}.dot"
        target.write_text(buffer.getvalue())
        print(f"wrote {target}")
    print("render with: dot -Tpng -O <file>")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
