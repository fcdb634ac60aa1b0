"""Affine chart near the most degenerate semistable configuration: the
W matrix of invariant ratios has rank at most 1 and Z inverts W - 1."""

from graphinv import Configuration, chart_coordinates, random_stable_configuration, verify_chart


def show(pt, label):
    print(label)
    for name, mat in (("W", pt.W), ("Z", pt.Z)):
        for row in mat:
            print(f"  {name} [ " + "  ".join(str(x) for x in row) + " ]")


limit = Configuration.from_affine([0, 0, 0, "inf", "inf", "inf"])
show(chart_coordinates(limit), "at (0,0,0,inf,inf,inf), the singular point itself:")
print("W is identically 0 and Z is identically -1 there.\n")

c = random_stable_configuration((1,) * 8, seed=5)
pt = chart_coordinates(c)
show(pt, "at a random stable configuration of 8 points:")

report = verify_chart(c)
print(f"\nall 2x2 minors of W vanish: {not report.minor_failures}")
print(f"Z*(W-1) = 1 entrywise: {bool(report)}")
for (i, j) in [(2, 5), (3, 6)]:
    w, z = pt.w_entry(i, j), pt.z_entry(i, j)
    print(f"  entry ({i},{j}): W = {w}, Z = {z}, Z*(W-1) = {z * (w - 1)}")
