"""Walkthrough: layer decomposition and the corner audit.

A nonnegative domain is sliced into nested level surfaces; corners of
each level are classified, and the audit checks exactly that the layer
sum of e + n_x + n_y reproduces the Maslov index, that single clean
layers satisfy chi(F) + concave = mu, and that the signed corner balance
holds.
"""

from hfcalc import (audit_index, build_s1s2, decompose_layers, enumerate_generators,
                    layer_euler, layer_index, maslov_index, positive_representative,
                    solve_domain)

d = build_s1s2().diagram
x, y = enumerate_generators(d)
bigon = positive_representative(solve_domain(d, x, y))

# Stack the full surface on top of the bigon: multiplicities (2,1,1).
coeffs = tuple(c + 1 for c in bigon.coefficients)
print("domain coefficients:", coeffs, " mu =", maslov_index(d, x, y, coeffs))

layers = decompose_layers(d, x, y, coeffs)
for layer in layers:
    print(f"level {layer.level}: regions {layer.regions} "
          f"chi = {layer_euler(d, layer)} "
          f"index = {layer_index(d, x, y, layer)}")
    for c in layer.clusters:
        print(f"   vertex {d.vertex_names[c.vertex]}: {c.kind} ({c.shape})"
              + (f" role {c.role}" if c.role else "")
              + (f" sign {c.sign:+d}" if c.sign is not None else ""))

report = audit_index(d, x, y, coeffs)
print()
print("layer sum", report.layer_sum, "= mu", report.maslov)
print("balance: x-interior", report.x_interior, "+ positive", report.positive_vertices,
      "= y-interior", report.y_interior, "+ negative", report.negative_vertices)

# The zero domain has no layers at all; the full surface alone is a
# closed torus with a single interior degenerate corner.
print()
print("zero domain report:", audit_index(d, x, x, (0,) * d.n_regions).layers)
full = audit_index(d, x, x, (1,) * d.n_regions)
print("full surface: mu =", full.maslov, " interior degenerate occurrences =",
      full.layers[0].interior_degenerate)
