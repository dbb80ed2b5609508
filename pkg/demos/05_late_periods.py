# %% [markdown]
# # Late periods in {1,4,5k}
#
# For this family the repetition begins only after a long irregular prefix.

# %%
from subperiod import lab

for rec in lab.scan_family("1,4,5k", range(1, 13)):
    r = rec.report
    print(f"k={rec.parameter:>2}  {str(rec.set):>8}  preperiod={r.preperiod:>3}  period={r.period:>3}")

# %% [markdown]
# From k=2 on, the period is 5k+1 and the preperiod equals the period.

# %%
reports = lab.special_case_scan("1,4,5k", range(2, 30))
print(all(r.period == r.set.window + 1 == r.preperiod for r in reports))

# %% [markdown]
# The same scan over {1,6,k}.

# %%
for rec in lab.scan_family("1,6,k", range(7, 25)):
    r = rec.report
    print(f"{str(rec.set):>8}  preperiod={r.preperiod:>3}  period={r.period:>3}")
