"""Intersection lattices of the genus-2 curves attached to involutions."""

from cubicfano import fano

# rule: -4 on the diagonal, then 0, 2, 1, 0 for products of order 2, 3, 5, 6
r = fano.klein_report()
print("55 curves on the Klein surface")
print("  rank", r["rank"], "signature", r["signature"][:2])
print("  discriminant", r["disc_lambda"], r["disc_lambda_factored"])
print("  with the incidence class:", r["disc_ns"], r["disc_ns_factored"], "index", r["index"])
print("  incidence class in the curve lattice:", r["incidence_in_lambda"])

# all 81 rules with values in {0, 1, 2}
records = fano.lambda_survey()
print("rules of rank <= 25:", fano.survey_low_rank(records))

for half, rep in fano.scaled_lattice_report().items():
    print(half, "full", rep["full"]["discriminant_factored"], "halved", rep["half"]["discriminant_factored"])

for name in ("d2", "d3", "d5", "d6", "a5"):
    g = fano.group_lattice_report(name)
    extra = {k: v for k, v in g.items() if k.endswith("square") or k.startswith("central_") or k == "F1_F2"}
    print(f"{name}: rank {g['rank']} signature {g['signature'][:2]} disc {g['discriminant_factored']} {extra}")

print(fano.numeric_identities())
