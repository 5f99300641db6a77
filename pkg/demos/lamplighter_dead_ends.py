"""Dead ends and positive curvature in the lamplighter group.

Walks through the d_m family: closed-form word lengths against BFS, the
escape profile out of the dead end, both depth notions, backtrack elements,
and the curvature of d_m t^k at growing comparison radii.
"""

from curvlab import deadend
from curvlab.core import bfs_metric
from curvlab.curvature import kappa
from curvlab.lamplighter import (
    l2_oracle,
    ll_dm_tk,
    ll_embed_in_dead_end,
    ll_geodesic,
    ll_length,
    ll_make_dm,
    LampConfig,
)


def main():
    oracle = l2_oracle()
    table = bfs_metric(oracle, 8)

    print("== Word metric sanity ==")
    print(f"BFS layer sizes to radius 8: {table.layer_sizes()}")
    mismatches = sum(1 for el, d in table.dist.items() if ll_length(el) != d)
    print(f"closed-form disagreements with BFS on B_8: {mismatches}")

    print("\n== The dead end d_3 ==")
    d3 = ll_make_dm(3)
    print(f"|d_3| = {ll_length(d3)}")
    profile = [ll_length(ll_dm_tk(3, i)) for i in range(8)]
    print(f"lengths along d_3 t^i, i = 0..7: {profile}")
    print("the valley descends for m steps and the walk escapes after 2m+1")

    for m in (1, 2, 3):
        dm = ll_make_dm(m)
        rep = deadend.report(oracle, table, dm, max_depth=2 * m + 2)
        print(
            f"d_{m}: dead end = {rep.is_dead_end}, escape depth = {rep.depth}, "
            f"strict depth = {rep.strict_depth}, witness = {' '.join(rep.witness)}"
        )

    print("\n== Backtracks of d_2 ==")
    bts = deadend.backtrack_elements(oracle, table, ll_make_dm(2), bound=6)
    t_powers = [ll_dm_tk(2, i) for i in (-1, 1)]
    print(f"{len(bts)} backtrack elements; includes d_2 t^{{+-1}}: {all(b in bts for b in t_powers)}")

    print("\n== Positive curvature of the backtracks ==")
    small = bfs_metric(oracle, 3)
    for m, k in ((3, 1), (5, 1), (5, 2)):
        g = ll_dm_tk(m, k)
        for r in (1, 2, 3):
            if m <= r + k:
                continue
            rep = kappa(oracle, small, g, r, "sphere")
            print(f"kappa_{r}(d_{m} t^{k}) = {rep.kappa} (> 0)")

    print("\n== Every suitable word extends to a dead end ==")
    w = LampConfig((1, 3), 2)
    m, ext = ll_embed_in_dead_end(w)
    word = ll_geodesic(w)
    print(f"w = {w}: geodesic {' '.join(word)}")
    print(f"extends by {len(ext)} letters to a geodesic spelling of d_{m}")


if __name__ == "__main__":
    main()
