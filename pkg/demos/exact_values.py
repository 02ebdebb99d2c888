"""Exact Z and F by exhaustive search, with their certificates.

The search for F starts at n - 1 and walks down, so the first failed set it
meets has maximum size.  The witness is the lexicographically least one of
that size, which makes the output reproducible.
"""

from zforce import Certificate, complete_bipartite, cycle, failed_zero_forcing_number, petersen, wheel, zero_forcing_number

for name, g in [("C_7", cycle(7)), ("K_{4,3}", complete_bipartite(4, 3)), ("W_5", wheel(5)), ("Petersen", petersen())]:
    z = zero_forcing_number(g)
    f = failed_zero_forcing_number(g)
    print(f"{name:9} Z={z.value}  F={f.value}  witness {f.witness.to_list()}")

cert = failed_zero_forcing_number(petersen())
print("\ncertificate as text:")
print(cert.to_text())

# the text block parses back and re-checks against the graph
again = Certificate.from_text(cert.to_text(), 10)
print("\nre-verified:", again.verify(petersen()))
