"""Recovering a path from its zeta image.

Shows the pair inverse (which needs both images), then the four
single-image strategies: square case, level-1 star recursion, the
bounce-pinned chain for b = a*k + 1, and bounded delta search.
Run:  python demos/03_inverting_zeta.py
"""

import rational_dyck as rd

P = rd.make_path(5, 8, "NNNENEEENEEEE")
Q, R = rd.zeta(P), rd.eta(P)

print("P:", P)
print("Q = zeta(P):", Q, "   R = eta(P):", R)
print()

print("pairing the steps of Q with the steps of R rotated half a turn:")
print("  gamma:", rd.pair_gamma(Q, R).cycle_from(1))
print("  iota(Q, R) =", rd.iota(Q, R), "== P:", rd.iota(Q, R) == P)
print()

print("single-image inversion strategies:")
result = rd.zeta_inverse_detailed(Q)
print(f"  auto chose {result.strategy!r}: {result.path}")
print("  delta trace of the predecessor chain:", result.deltas)
print()

square = rd.lowest_path(4, 5)
print("square case: chi is path reversal, so one image suffices")
print("  zeta^-1 of", rd.zeta(square), "->", rd.zeta_inverse(rd.zeta(square), "square"))
print()

fuss = rd.make_path(3, 7, "NNENEEEEEE")
qf = rd.zeta(fuss)
bounce = rd.initial_bounce(qf)
print("width-7 = 3*2+1 grid: the bounce inside the image pins delta exactly")
print(f"  bounce of {qf}: v={list(bounce.v)} h={list(bounce.h)}"
      f"  so delta = {bounce.v_total + bounce.h_total + 1}")
print("  chain inverse:", rd.zeta_inverse_fuss(qf), "== original:",
      rd.zeta_inverse_fuss(qf) == fuss)
print()

print("general case: bounded search over the delta window")
for p in rd.enumerate_paths(5, 8)[:5]:
    detail = rd.zeta_inverse_detailed(rd.zeta(p), "search")
    print(f"  {rd.zeta(p)} -> {detail.path}  deltas={list(detail.deltas)}")

print()
print("the conjugate-area involution chi = eta after inverting zeta:")
print("  chi(Q) =", rd.chi(Q), " chi(chi(Q)) == Q:", rd.chi(rd.chi(Q)) == Q)
