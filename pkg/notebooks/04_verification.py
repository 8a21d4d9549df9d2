# %% [markdown]
# # Verification suites
#
# `run_suite` sweeps the seeded pools from the packaged manifest and checks
# every bound row by row. The same report is available from the command
# line as `gridexplore verify <suite>`.

# %%
from gridexplore.verify import load_manifest, run_suite

report = run_suite("tightness")
print(report.to_markdown())

# %% [markdown]
# The CSV form carries one row per polygon and check, with raw numbers.
# Pass flags are recomputed from those numbers whenever a report is written.

# %%
print(report.to_csv().splitlines()[:6])

# %% [markdown]
# A smaller manifest makes quick experiments cheap; `widen` multiplies the
# random pools for fuzzing.

# %%
m = load_manifest()
m["offsets"] = dict(m["offsets"], count=50)
m["thick_offsets"] = dict(m["thick_offsets"], count=10)
small = run_suite("offsets", manifest=m, widen=2)
print(len(small.rows), "offset rows, all pass:", small.ok)
