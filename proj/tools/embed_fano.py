#!/usr/bin/env python3
"""Regenerates include/toricdisc/fano_data.hpp from data/fano/*.json."""
import pathlib
import sys

ORDER = [
    "P2", "P1xP1", "DS8", "DS7", "DS6",
    "P3", "P2xP1", "PP2_O_O2", "PP1_O_O_O1", "PP2_O_O1",
    "P1xP1xP1", "DS8xP1", "F3_1", "F3_2", "F3_3", "F3_4", "F3_5",
    "DS7xP1", "F4_1", "F4_2", "F4_3", "DS6xP1", "F5_1",
]

root = pathlib.Path(__file__).resolve().parent.parent
data = root / "data" / "fano"
out = root / "include" / "toricdisc" / "fano_data.hpp"

missing = [n for n in ORDER if not (data / f"{n}.json").exists()]
if missing:
    sys.exit(f"missing data files: {missing}")

lines = [
    "#pragma once",
    "",
    "// Generated by tools/embed_fano.py from data/fano/*.json; do not edit.",
    "",
    "#include <string_view>",
    "#include <vector>",
    "",
    "namespace toricdisc {",
    "",
    "struct FanoDocument {",
    "  std::string_view name;",
    "  std::string_view json;",
    "};",
    "",
    "inline const std::vector<FanoDocument>& fano_documents() {",
    "  static const std::vector<FanoDocument> docs{",
]
for name in ORDER:
    text = (data / f"{name}.json").read_text()
    lines.append(f'      {{"{name}", R"json({text})json"}},')
lines += [
    "  };",
    "  return docs;",
    "}",
    "",
    "}  // namespace toricdisc",
    "",
]
out.write_text("\n".join(lines))
