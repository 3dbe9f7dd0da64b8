# coding: utf-8

# # Smoothed ranks and the bandwidth
#
# A smoothed rank replaces the 0/1 indicator in an ordinary rank with a
# kernel CDF. Small bandwidths recover the ordinary ranks shifted by one half.
# Large bandwidths pull every rank toward n/2.

# In[1]:

import numpy as np

import rankcorr as rc
from rankcorr.bandwidth import heller_bandwidth, silverman_bandwidth

rng = np.random.default_rng(7)
x = rng.standard_normal(12)

# In[2]:

print("ordinary ranks      ", rc.ordinary_ranks(x).ranks)
for h in (1e-6, 0.1, 0.5, 2.0):
    print(f"smoothed, h={h:<8g}", rc.smoothed_ranks(x, "normal", h).ranks.round(2))

# The ranks always sum to n^2/2 because H(u) + H(-u) = 1 for a symmetric kernel:

# In[3]:

print(rc.smoothed_ranks(x, "logistic", 0.7).ranks.sum(), x.size ** 2 / 2)

# ## Data-driven bandwidths
#
# Both rules scale with a robust spread estimate. The Heller rule shrinks
# more slowly with n than Silverman's rule of thumb.

# In[4]:

for n in (20, 50, 200, 1000):
    v = rng.standard_normal(n)
    print(f"n={n:5d}  silverman={silverman_bandwidth(v):.3f}  heller={heller_bandwidth(v):.3f}")

# ## Effect on the correlation estimate
#
# At moderate n the data-driven kernel bandwidth attenuates the estimate.
# The interpolated ECDF stays close to Spearman's coefficient.

# In[5]:

model = rc.NormalModel(rho=0.8)
s = rc.sample_bivariate_normal(model, 50, 11)
print("spearman            ", round(rc.spearman_dsq(s).estimate, 4))
for spec in ("fixed:0.01", "silverman", "heller:mad", "fixed:1.0"):
    r = rc.smoothed_score_correlation(s, "normal", rc.BandwidthSpec.parse(spec))
    print(f"normal kernel {spec:11s}", round(r.estimate, 4))
print("interpolated ECDF   ", round(rc.smoothed_score_correlation(s, "interpolated").estimate, 4))
