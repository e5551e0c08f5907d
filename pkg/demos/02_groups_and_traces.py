"""The groups generated by involutions and their five-dimensional representations."""

from cubicfano.groups import element_order, enumerate_group, involutions, pair_order_histogram
from cubicfano.reps import build_representation, eigenspace_cubics, klein_symmetry_rep, rep_trace_table

for name in ("z2", "d2", "d3", "d5", "d6", "a5", "psl2_11"):
    G = enumerate_group(name)
    print(f"{name:8s} order {len(G):4d}  involutions {len(involutions(G)):3d}  pair orders {pair_order_histogram(G)}")

G = enumerate_group("psl2_11")
print("element orders in PSL2(F_11):", sorted({element_order(G, g) for g in G.elements}))

# every type has trace 1 on involutions, -1 on order 3, 0 on order 5, 1 on order 6
for name, dec in (("a5", "standard"), ("d3", "2V1/3+T"), ("d5", "V1/5+V2/5+T"), ("d6", "V1/6+V2/6+T")):
    rep = build_representation(name, dec)
    table = {row.order: str(row.trace) for row in rep_trace_table(rep)}
    print(f"{rep.label:16s} traces {table}  invariant cubics {len(eigenspace_cubics(rep))}")

# the order-55 symmetry group of the Klein cubic has only the Klein cubic as invariant
rep = klein_symmetry_rep()
print("Klein symmetries:", len(rep.group), "elements")
print("invariant cubics:", [str(p) for p in eigenspace_cubics(rep)])
