"""The four base sequences, each computed two ways, and how they relate."""

from htdet import sequences as sq

print("n   S_n        s_n       C_n      t_n")
for n in range(11):
    print(f"{n:<3} {sq.large_schroeder(n):<10} {sq.small_schroeder(n):<9} {sq.catalan(n):<8} {sq.fine(n)}")

# Large Schroeder numbers also come out of a binomial-weighted Catalan sum.
assert all(sq.large_schroeder(n) == sq.schroeder_via_catalan(n) for n in range(1, 30))

# Fine numbers have a convolution recurrence against the Catalan numbers,
# and a halved alternating sum that must always come out integral.
print("\nt_(n+1) via 1/2 sum C_k/(-2)^(n-k):", [sq.fine_half_alternating(n) for n in range(1, 10)])

# C_n = 2 t_(n+1) + t_n holds from n = 1; at n = 0 it would claim 1 = 2.
print("C_n = 2t_(n+1) + t_n for n = 0..6:", [sq.check_catalan_fine_relation(n) for n in range(7)])

print("\nu_n:", [sq.u_sequence(n) for n in range(1, 12)])
print("b_n:", [sq.a137398(n) for n in range(1, 12)])
