"""Invariant cubic families, smooth members, and the order-8 dihedral scan."""

from cubicfano import fano

for name in ("d2", "d3", "d5", "d6", "a5"):
    m = fano.family_membership_check(name)
    s = fano.smoothness_scan(name, seed=1)
    print(f"{name}: {m['representation']:18s} dim {m['dimension']:2d} members {m['all_listed_polynomials_member']}  smooth {s['generic_member_smooth']}")
    print("    witness", s["witness_parameters"])

print("klein:", fano.smoothness_scan("klein")["generic_member_smooth"])

# no 5-dimensional representation of D4 with reflections of trace 1 carries a smooth cubic
r = fano.d4_nonexistence_scan(seed=0)
for case in r["cases"]:
    print(f"{case['decomposition']:14s} Tr a = {case['trace_a']:2d}, Tr a^2 = {case['trace_a2']:2d}")
    for chi, rec in sorted(case["characters"].items()):
        how = rec["certificate"] or f"{rec['sampled']} samples, all singular"
        if rec["subspace_certificate"]:
            how += f" on coordinates {rec['subspace_certificate']}"
        print(f"    {chi:2s} dim {rec['dimension']}  {how}")
print("control D5 finds a smooth member:", r["control_d5"]["smooth_found"])
print("dihedral groups containing D4:", r["containment"])
