"""Regenerate crates/core/src/grid/lebedev_data.rs from scipy's Lebedev rules."""
import numpy as np
from scipy.integrate import lebedev_rule

ORDERS = [(6, 3), (26, 7), (50, 11), (110, 17), (194, 23), (302, 29)]

out = ["// Generated by tools/gen_lebedev.py. Do not edit.",
       "// Rows are (x, y, z, w) with weights summing to 1.", ""]
for n, deg in ORDERS:
    x, w = lebedev_rule(deg)
    assert x.shape[1] == n
    w = w / w.sum()
    out.append(f"pub(super) static LEBEDEV_{n}: [[f64; 4]; {n}] = [")
    for i in range(n):
        out.append("    [{}, {}, {}, {}],".format(*(repr(float(v)) for v in (x[0, i], x[1, i], x[2, i], w[i]))))
    out.append("];")
    out.append("")
open("crates/core/src/grid/lebedev_data.rs", "w").write("\n".join(out))
