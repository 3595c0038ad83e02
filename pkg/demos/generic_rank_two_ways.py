"""Two independent routes to the generic orbit rank, side by side.

The probabilistic route samples random integer points of the spectral
variety and takes the best exact rank seen; a nonvanishing minor misses
its zero set at almost every sample, so the maximum is right except with
vanishing probability.  The symbolic route writes each moment entry as an
affine polynomial in the chart coordinates and hunts for a nonzero minor
determinant, which certifies the answer outright.  The package always
cross-checks one against the other; this script just makes the agreement
visible.
"""

from orbitadm import generic_h_orbit_dim, parse, build_datum
from orbitadm.cli import corpus_path
from orbitadm.moment import symbolic_moment_entries
from orbitadm import symbolic_generic_rank

for name in ("heisenberg_yz", "grelaud", "h5_y1y2"):
    pf = parse(corpus_path(name).read_text())
    D = build_datum(pf.algebra, pf.subalgebra_rows, pf.functional_vals)

    print(f"== {name} (n = {D.n}, m = {D.m})")
    print("   moment entries as polynomials in the chart coordinates:")
    for row in symbolic_moment_entries(D):
        print("     ", [str(p) for p in row])

    prob = generic_h_orbit_dim(D, trials=20, bound=10 ** 6, seed=0)
    symb = symbolic_generic_rank(D)
    print(f"   probabilistic: d_tau = {prob.d_tau} "
          f"(witness x = {prob.witness})")
    print(f"   symbolic:      d_tau = {symb.d_tau} "
          f"(witness x = {symb.witness})")
    assert prob.d_tau == symb.d_tau
    print("   agree:", prob.d_tau == symb.d_tau)
    print()
