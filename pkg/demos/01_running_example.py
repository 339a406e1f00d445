"""A walking tour of one (5,8)-Dyck path.

Builds the path NNNENEEENEEEE, prints its level data, the hook and row
length fillings, every statistic, and the corresponding core partition.
Run:  python demos/01_running_example.py
"""

import rational_dyck as rd
from rational_dyck.render import RenderSpec, render_ascii

P = rd.make_path(5, 8, "NNNENEEENEEEE")

print("path:", P, f"in the {P.a} x {P.b} grid")
print("lattice point levels:", P.levels())
print("reading word        :", P.reading_word())
print("reverse reading word:", P.reverse_reading_word())
print("north levels:", P.north_levels())
print("east levels :", P.east_levels())
print()

print("reading permutation sigma:", rd.sigma(P).one_line)
print("reverse permutation tau  :", rd.tau(P).one_line)
print("cycle gamma              :", rd.gamma(P).cycle_from(1))
print("east steps sit at the cyclic descents of sigma:",
      rd.sigma(P).right_cyclic_descents())
print()

core = rd.anderson(P)
print("core partition:", core.parts)
print("leading hooks == positive hooks under the path:", core.leading_hooks())
print("boxes with hook < 5:", rd.boundary_boxes(core, 5),
      " | boxes with hook < 8:", rd.boundary_boxes(core, 8))
print()

print("statistics:", rd.statistics_summary(P))
print("skew length five ways:",
      rd.skew_length_core(core),
      rd.skew_length_peaks_valleys(P),
      rd.skew_inversions(P),
      rd.flip_skew_inversions(P),
      rd.laser_filling(P).total())
print()

print(render_ascii(P, RenderSpec(overlays=("hooks", "row-lengths"))))
