"""Walk through a few cells of the T*P^2 table, then print HH^0..HH^3.

Run: python3 demos/p2_walkthrough.py
"""
from bgghoch.bgg import build_bgg_complex, dominant_spectrum
from bgghoch.cohomology import bgg_cohomology
from bgghoch.emit import to_text
from bgghoch.hochschild import assemble, block
from bgghoch.linalg import rank_exact
from bgghoch.parabolic import build_vjk


def main():
    blk = block("A2", (1,))
    print(f"block {blk.name}: dim G/P = {blk.n}")

    # V_{1,2m} at lam = (m, m): the BGG complex is C^2 -> C with a surjective map
    for m in range(3):
        V = build_vjk(blk.parabolic, 1, 2 * m).V
        lam = (m, m)
        cx = build_bgg_complex(V, lam)
        ranks = [rank_exact(d) for d in cx.differentials]
        print(f"V_(1,{2 * m}) dim {V.dim}, dominant weights {dominant_spectrum(V)}")
        print(f"  lam={lam}: complex {cx.dims()}, ranks {ranks}, H = {bgg_cohomology(V, lam).dims}")

    for s in range(4):
        print()
        print(to_text(assemble(blk, s)))


if __name__ == "__main__":
    main()
