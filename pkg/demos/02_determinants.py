"""Hessenberg-Toeplitz determinants: the linear recurrence against dense elimination."""

from htdet import HTSpec, d_minus, d_plus, det_fraction_free, det_recurrence
from htdet.hessenberg import build_matrix, deutsch_fine, forward_dets, hankel_det, invert_sequence
from htdet.sequences import SequenceId, large_schroeder, small_schroeder

S = [large_schroeder(i) for i in range(12)]

spec = HTSpec(1, S[1:5])
for row in build_matrix(spec):
    print(" ".join(f"{x:>4}" for x in row))
print("det by recurrence:", det_recurrence(spec), " by Bareiss:", det_fraction_free(build_matrix(spec)))

# With a0 = +1 the determinants of S_1..S_n alternate in sign and track S_(n-1).
print("\nD+(S_1..S_n):", [d_plus(S[1:n + 1]) for n in range(1, 9)])
# With a0 = -1 every term of the expansion is positive.
print("D-(S_0..S_(n-1)):", [d_minus(S[:n]) for n in range(1, 9)])
print("S_n:             ", S[:9])

# Inverting: the forward determinants of S_0, S_1, ... are (-1)^(n-1) s_(n-1),
# and inverting that sequence returns the Schroeder numbers.
b = forward_dets(S[:9])
print("\nforward dets:", b)
print("recovered:   ", invert_sequence(b))
print("s_n:         ", [small_schroeder(n) for n in range(9)])

print("\nHankel det(S_(i+j)), n=1..6:", [hankel_det(SequenceId.LargeSchroeder, 0, n) for n in range(1, 7)])
print("Hankel det(t_(i+j+2)), n=1..6:", [hankel_det(SequenceId.Fine, 2, n) for n in range(1, 7)])
print("Fine numbers from Catalan determinants:", [deutsch_fine(n) for n in range(1, 12)])
