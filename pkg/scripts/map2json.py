#! /usr/bin/env python3

"""This script writes any map source - a builtin:NAME reference, a URL or a
map-spec file - out as a canonical map-spec JSON file, after validating it.
The file is saved in the current directory."""

import sys
import json
import bidisk

if len(sys.argv) < 2:
    print("Please provide a map source to convert")
    sys.exit()

source = sys.argv[1]
m = bidisk.map_from_source(source)
filename = source.split("/")[-1].split(":")[-1].split(".")[0]

with open(f"{filename}.json", "w") as f:
    json.dump(bidisk.map_to_spec(m), f, indent=1)
