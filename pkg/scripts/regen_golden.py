#!/usr/bin/env python3
"""Regenerate the golden outputs for the documented CLI examples.

Run from the repository root after an intentional output change:

    python scripts/regen_golden.py
"""

import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from cli_examples import EXAMPLES  # noqa: E402

GOLDEN = ROOT / "tests" / "golden"


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for name, argv, _schema, fmt in EXAMPLES:
        proc = subprocess.run([sys.executable, "-m", "fibrelab", *argv],
                              capture_output=True, check=True)
        suffix = "csv" if fmt == "csv" else "json"
        path = GOLDEN / f"{name}.{suffix}"
        path.write_bytes(proc.stdout)
        print(f"wrote {path.relative_to(ROOT)} ({len(proc.stdout)} bytes)")


if __name__ == "__main__":
    main()
