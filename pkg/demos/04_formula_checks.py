# %% [markdown]
# # Checking closed-form period formulas
#
# Each family comes with a predicted period. `verify_family` computes the
# certified period for every parameter and labels the record.

# %%
from subperiod import lab

for family, ks in (("T1", range(3, 1001)), ("T2", range(4, 1001)), ("T3", range(2, 1001))):
    print(family, lab.summarize(lab.verify_family(family, ks)))

# %% [markdown]
# With the parity conditions written the other way round, T2 and T3 fail on
# every k.

# %%
for family, ks in (("T2", range(4, 40)), ("T3", range(2, 40))):
    print(family, "stated:", lab.summarize(lab.verify_family(family, ks, variant="stated")))

# %% [markdown]
# Two-element sets: period 2*s1 exactly when s2 is an odd multiple of s1.
# The "divisible by 3" reading breaks on {1,6}.

# %%
pairs = lab.eq1_parameters(range(1, 61), range(1, 61))
print("derived:", lab.summarize(lab.verify_family("EQ1", pairs)))
stated = lab.verify_family("EQ1", pairs, variant="stated")
print("stated: ", lab.summarize(stated))
print([str(r.prediction.set) for r in stated if r.status != lab.MATCH][:8])

# %% [markdown]
# T4 predicts period 2s for every subset of {2s+1, 3s+2, ...}. It holds for
# s = 1 and fails often beyond that.

# %%
recs = lab.verify_family("T4", lab.t4_parameters(range(1, 11), 4))
print(lab.summarize(recs))
for r in recs[16:24]:
    print(f"  {str(r.prediction.set):>12}  predicted {r.prediction.predicted_period:>2}"
          f"  computed {r.computed.period:>2} from {r.computed.preperiod:>2}  {r.status}")

# %% [markdown]
# Covered elements: removing them leaves the outcome sequence unchanged.

# %%
for s in ([1, 2, 5], [1, 2, 6], [1, 3, 9], [2, 5, 9]):
    print(s, "covered:", lab.redundant_elements(s))
