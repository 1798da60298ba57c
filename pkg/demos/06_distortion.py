"""Distortion measurement: are the embedded copies metrically faithful?

A subgroup embedding is quasi-isometric when the ambient word length of
an image stays within affine bounds of the product norm of the input.
The sweep samples random inputs, embeds them, and records the image's
caret-count bracket against the input norm; exact rational line fits
then exhibit the affine envelopes, whose slopes land inside [1/4, 4].
"""

import io

from thompsonf import (
    distortion_envelopes,
    distortion_sweep,
    f_z_spec,
    product_spec,
    sweep_to_csv,
)

# sweep the F x Z embedding and show the CSV that the CLI would emit
samples = distortion_sweep(f_z_spec(), 8, seed=0)
buffer = io.StringIO()
sweep_to_csv(samples, buffer)
print(buffer.getvalue())

# the upper image estimate sits exactly on the line 4 * norm + 12
upper, lower = distortion_envelopes(distortion_sweep(f_z_spec(), 500, seed=0))
print("F x Z upper envelope: slope", upper.slope,
      "intercept", upper.envelope_intercept)
print("F x Z lower envelope: slope", lower.slope,
      "intercept", lower.envelope_intercept)

# the same measurement for product embeddings at fixed prefix sets;
# slopes stay pinned while the intercepts depend on the addresses
for label, spec in (
    ("F x Z   at ('0','11')      ", product_spec(("0", "11"), 1)),
    ("F^2     at ('0','10','11') ", product_spec(("0", "10", "11"), 0)),
    ("F^2xZ^2 at ('00','01','1') ", product_spec(("00", "01", "1"), 2)),
):
    upper, lower = distortion_envelopes(distortion_sweep(spec, 500, seed=1))
    print(f"{label}: upper slope {upper.slope} intercept {upper.envelope_intercept}, "
          f"lower slope {lower.slope} intercept {lower.envelope_intercept}")
