"""Weights of the canonical network and the matrices they produce.

psi reads off the weights of the uppermost paths of G_n; phi undoes it by
taking consecutive differences.  When the weights satisfy the strict
trapeze and parallelogram inequalities the uppermost paths are the unique
optimal ones, so the transfer matrix is psi(W).
"""

from tropical_tp import (
    build_canonical,
    count_optimal_paths,
    gen_weights,
    inequality_report,
    phi,
    psi,
    transfer_matrix,
)
from tropical_tp.io import to_dot
from tropical_tp.network import example_network

W = gen_weights(3, "strict", seed=1)
print("strict weights W:")
print("\n".join(" ".join(f"{x!s:>4}" for x in row) for row in W.tolist()))
A = transfer_matrix(build_canonical(W))
print("transfer matrix:")
print(A)
print("equals psi(W):", A == psi(W), "| phi(A) == W:", phi(A) == W)
print("inequalities:", inequality_report(W))
print()

W = gen_weights(3, "arbitrary", seed=1)
A = transfer_matrix(build_canonical(W))
rep = inequality_report(W)
print("arbitrary weights violate", len(rep.violations), "inequalities;",
      "transfer == psi(W):", A == psi(W))
print()

print("the small two-source network, varying the weight alpha of its top arc")
for alpha in (4, 6, 8):
    net = example_network(alpha)
    A = transfer_matrix(net)
    print(f"  alpha={alpha}: A = {str(A).splitlines()}, optimal paths 2->2: "
          f"{count_optimal_paths(net, 1, 1)}")
print()
print("DOT for G_2 (pipe into `dot -Tsvg`):")
print(to_dot(build_canonical(gen_weights(2, "strict", seed=0))))
