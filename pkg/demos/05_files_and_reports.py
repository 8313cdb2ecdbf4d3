"""Round-trip a scheme file and produce both report formats."""
import json
import tempfile
from pathlib import Path

from assocscheme import analyze, by_name, dump_catalog, load_scheme

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "petersen.json"
    dump_catalog("petersen", path)
    print(path.read_text())
    table = load_scheme(path)
    print("round trip equal:", table == by_name("petersen").table)

report = analyze(table, name="petersen")
print(report.to_text())
doc = json.loads(report.to_machine())
print("machine report keys:", sorted(doc))
print("exit code:", report.exit_code)
