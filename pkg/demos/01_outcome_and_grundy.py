# %% [markdown]
# # Outcome and Grundy sequences
#
# A subtraction game is a heap of tokens and a fixed set S of allowed
# removals. Position p is a P-position (0) when every move leads to an
# N-position, and an N-position (1) otherwise.

# %%
import numpy as np

from subperiod import SubtractionSet, best_move, grundy_sequence, outcome_sequence

S = SubtractionSet([1, 3, 7, 8])
seq = outcome_sequence(S, 45)
print(seq.to_string())

# %% [markdown]
# The P-positions are where the player to move loses.

# %%
print("P-positions:", seq.p_positions().tolist())

# %% [markdown]
# The Grundy values refine the P/N picture: value 0 is exactly a P-position.

# %%
g = grundy_sequence(S, 45)
print(" ".join(map(str, g.values)))
assert np.array_equal(g.outcome_bits(), seq.bits)

# %% [markdown]
# Optimal play: from an N-position take the smallest move that lands on a P-position.

# %%
for pos in (9, 15, 16, 23):
    move = best_move(S, pos)
    print(pos, "->", "P-position" if move is None else f"take {move}, leaving {pos - move}")

# %% [markdown]
# The packed kernel handles long runs quickly.

# %%
import time

t0 = time.perf_counter()
long = outcome_sequence(S, 10**7)
print(f"10^7 positions in {time.perf_counter() - t0:.3f} s; last bit {long[-1]}")
