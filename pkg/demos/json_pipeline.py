"""The command pipeline, driven in-process: emit a catalog entry to a file,
then validate it, report invariants, and measure a torus.

Each command writes deterministic text (or JSON with --json) and never
prints a floating-point number.  The same flows work from a shell once the
package is installed:

    nilalg catalog iwasawa --json > iwasawa.json
    nilalg check iwasawa.json
    nilalg invariants iwasawa.json --json

Run: python3 demos/json_pipeline.py
"""

import contextlib
import io
import json
import tempfile
from pathlib import Path

from nilalg.cli import main

with tempfile.TemporaryDirectory() as scratch:
    entry_path = Path(scratch) / "iwasawa.json"

    # catalog output is itself a loadable document
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        assert main(["catalog", "iwasawa", "--json"]) == 0
    entry_path.write_text(buffer.getvalue())

    print("== check ==")
    main(["check", str(entry_path)])

    print()
    print("== invariants (selected) ==")
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        assert main(["invariants", str(entry_path), "--json"]) == 0
    results = json.loads(buffer.getvalue())["results"]
    for key in ("h1Dim", "algDimUpperBound", "albaneseDim", "b1"):
        print(f"{key}: {results[key]}")

    print()
    print("== torus-adim ==")
    tau_path = Path(scratch) / "tau.json"
    tau_path.write_text(json.dumps({"tau": [[{"im": "1"}, 0], [0, {"im": "1"}]]}))
    main(["torus-adim", str(tau_path), "--radius", "2"])
