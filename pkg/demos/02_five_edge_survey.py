# K_n with five edges removed: which of these graphs share a spectrum?
from spectral_ds import generate_by_edges, kn_minus, profile, survey_kn_minus
from spectral_ds.graph import complete, cycle, disjoint_union, path
from spectral_ds.graph6 import to_graph6

# %% every way to delete five edges, up to isomorphism
patterns = list(generate_by_edges(5))
print(len(patterns), "patterns")              # 26

# %% at n = 7 exactly one pair collides
report = survey_kn_minus(7, 5)
print(report.summary())

# %% from n = 8 on, every spectrum is distinct
for n in range(8, 13):
    print(n, len(survey_kn_minus(n, 5).nontrivial), "nontrivial classes")

# %% the near miss: same triangles and 4-walks, different multiplicity of -1
for n in range(6, 10):
    a = profile(kn_minus(n, path(6)))
    b = profile(kn_minus(n, disjoint_union(cycle(4), complete(2))))
    print(n, (a.t, a.w4) == (b.t, b.w4), a.mult_minus1, b.mult_minus1)

# %% graph6 of the exceptional pair
for g in report.nontrivial[0].members:
    print(to_graph6(g))
