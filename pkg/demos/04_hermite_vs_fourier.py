"""Side-by-side concentration of one beat in the Hermite and Fourier domains."""

from hermite_qrs import (
    concentration_report,
    dft_spectrum,
    extract_segment,
    forward_ht,
    synthesize_qrs,
)

# three nonzero orders, so three Hermite coefficients should say everything
rec = synthesize_qrs([(0, 1.0), (2, -0.6), (3, 0.4)], delta_true=1.6, window=31)
segment = extract_segment(rec, 0, 31)

ht = forward_ht(segment, 1.6)
spectrum = dft_spectrum(segment)
report = concentration_report(segment, ht, spectrum)

print("l1 (Hermite):", round(report["ht"]["l1"], 4), " l1/l2:", round(report["ht"]["l1_over_l2"], 4))
print("l1 (Fourier):", round(report["ft"]["l1"], 4), " l1/l2:", round(report["ft"]["l1_over_l2"], 4))

# energy captured by the k strongest terms, per domain
print("\n k   Hermite     Fourier")
for k in (1, 2, 3, 5, 10):
    print(f"{k:2d}   {report['top_k']['ht'][k - 1]:.6f}   {report['top_k']['ft'][k - 1]:.6f}")

print("\nthree Hermite terms hold", f"{report['top_k']['ht'][2]:.4%}", "of the energy;")
print("the Fourier side needs many more bins to get there")
