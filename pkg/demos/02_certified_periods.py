# %% [markdown]
# # Certified periods
#
# Each value depends only on the previous max(S) values. If one stretch of
# max(S) positions repeats after p steps, every later position repeats too.
# `find_period` looks for the smallest such p, then the earliest start.

# %%
from subperiod import detect_period, find_period, outcome_sequence, verify_certificate

report = find_period([1, 3, 7, 8])
print(report.certificate)
print("block   ", report.block)
print("notation", report.notation)

# %% [markdown]
# Certificates can be checked independently of how they were found.

# %%
seq = outcome_sequence([1, 3, 7, 8], 100)
cert = detect_period(seq, window=8)
print(verify_certificate(seq, cert))
print(verify_certificate(seq, type(cert)(0, 14, 8, 100)))

# %% [markdown]
# Sequences need not be periodic from the start. {1,6,9} settles into period 5
# only after ten positions.

# %%
late = find_period([1, 6, 9])
print(late.preperiod, late.period, late.notation)

# %% [markdown]
# The search doubles its horizon until a certificate fits. Some sets need a
# few rounds.

# %%
slow = find_period([1, 8, 22, 23])
print(f"preperiod={slow.preperiod} period={slow.period} horizon used={slow.horizon}")

# %% [markdown]
# The same machinery works on Grundy values. The P/N period always divides
# the Grundy period.

# %%
for s in ([2, 5], [1, 4, 6], [3, 4, 9]):
    print(s, find_period(s).period, find_period(s, kind="grundy").period)
