"""The sequence 0 -> T -> M -> V -> 0 on T*P^2 and where its cohomology does not split.

For each (j, k) and dominant lam, prints H(T), H(M), H(V) whenever
h(M) differs from h(T) + h(V).  A nonzero connecting map H^i(V) -> H^{i+1}(T)
is the only way this can happen.

Run: python3 demos/presentation_sequence.py
"""
from bgghoch.bgg import dominant_spectrum
from bgghoch.cohomology import bgg_cohomology
from bgghoch.hochschild import block
from bgghoch.parabolic import build_vjk


def main():
    pd = block("A2", (1,)).parabolic
    for j in range(3):
        for k in range(-8, 9, 2):
            fam = build_vjk(pd, j, k)
            if not fam.V.dim:
                continue
            lams = sorted(set(dominant_spectrum(fam.M)) | set(dominant_spectrum(fam.T)) | set(dominant_spectrum(fam.V)))
            for lam in lams:
                hm, ht, hv = (bgg_cohomology(E, lam).dims for E in (fam.M, fam.T, fam.V))
                if hm != [a + b for a, b in zip(ht, hv)]:
                    print(f"V_({j},{k}) lam={lam}: H(T)={ht} H(M)={hm} H(V)={hv}")


if __name__ == "__main__":
    main()
