"""Smoke test for the python bindings: parsing, complexes, homology,
matchings, and the verification harness, all on small instances."""

import cutcomplex as cc

# family expressions parse, normalize, and build graphs
assert cc.describe("cycle_power( 9 , 3 )") == "cycle_power(9,3)"
assert cc.vertex_count("cartesian(complete(3), path(2))") == 6
assert (0, 1) in cc.edges("circulant(4; 1)")

# facets of the 4-cycle's complex: the two diagonals
assert {tuple(f) for f in cc.facets("circulant(4; 1)")} == {(0, 2), (1, 3)}
assert cc.is_face("circulant(4; 1)", face=[0, 2])
assert not cc.is_face("circulant(4; 1)", face=[0, 1, 2])

# f-vector of the same complex
fv = cc.f_vector("circulant(4; 1)")
assert not fv["void"]
assert fv["dim"] == 1
assert fv["counts"] == {-1: 1, 0: 4, 1: 2}

# exact reduced homology: a wedge of two 4-spheres
betti = cc.betti("cycle_power(9,3)")
assert betti["coverage"] == "full"
assert betti["dims"] == {4: {"rank": 2, "torsion": []}}

# windowed homology reports its coverage
window = cc.betti("cycle_power(9,3)", dims=(3, 4))
assert window["coverage"] == "window"
assert window["window"] == (3, 4)
assert window["dims"][4]["rank"] == 2

# sequential element matchings certify a single 6-sphere
morse = cc.morse("cycle_power(10,3)")
assert morse["acyclic"]
assert morse["claim"] == "sphere of dimension 6"
assert [c["face"] for c in morse["critical"]] == [[1, 2, 3, 5, 6, 8, 9]]
assert morse["filtration_sizes"][-1] == 1

# single-claim checks
report = cc.check_cycle_power(8, 3)
assert report["result"] == "pass"
assert report["method"] == "morse+homology"

middle = cc.check_cycle_power_middle(9, 3)
assert middle["result"] == "agree"
assert middle["table_backed"]
assert middle["r_comparison"] == "exact-rational"

product = cc.check_complete_path(2, 2)
assert product["result"] == "pass"

table = cc.check_table(4, budget=9)
void_cell = next(r for r in table if r["id"] == "table-4-entry(2,3)")
assert void_cell["result"] == "pass"
assert void_cell["computed"] == "void complex"

# a small suite run stays clean
reports = cc.verify("theorems", budget=10, jobs=1)
assert reports
assert all(r["result"] in ("pass", "skipped") for r in reports)
assert any(r["result"] == "pass" for r in reports)

print("smoke test passed ({} suite reports)".format(len(reports)))
