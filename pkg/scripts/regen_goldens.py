"""Regenerate fixtures/golden/*.txt from fixtures/golden/commands.json.

Each golden file holds the exit status on its first line and stdout after it.
Run from the repository root; review the diff before committing.
"""

import io
import json
from pathlib import Path

from qhomotopy.cli import run

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "fixtures" / "golden"


def render_case(argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(argv, out, err)
    return f"exit {status}\n{out.getvalue()}"


def main():
    cases = json.loads((GOLDEN / "commands.json").read_text())
    for name, argv in cases.items():
        (GOLDEN / f"{name}.txt").write_text(render_case(argv))
        print(f"wrote {name}.txt")


if __name__ == "__main__":
    main()
