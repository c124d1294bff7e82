#! /usr/bin/env python3

"""This script classifies every builtin map at (1, 1) from both sides and
prints the table, with how long each classification took."""

import sys
import os
import warnings
from datetime import datetime
sys.path.append(os.path.join(".."))
import bidisk
from bidisk.maps import BUILTINS
from bidisk.base import ClassificationError, IdentitySlice

tau = bidisk.BoundaryPoint(1, 1)
print("{:16}{:7}{:14}{:>12}{:>10}".format("map", "side", "kind", "value", "seconds"))
for name in BUILTINS:
    m = bidisk.Builtin(name)
    for side in ("left", "right"):
        start = datetime.now()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            try:
                dw = bidisk.classify_dw(m, tau, side)
                kind, value = dw.kind, dw.value
            except (ClassificationError, IdentitySlice) as e:
                kind, value = type(e).__name__, None
        delta = (datetime.now() - start).total_seconds()
        print("{:16}{:7}{:14}{:>12}{:>10.3f}".format(
         name, side, kind, "" if value is None else "{:.6g}".format(value), delta
        ))
