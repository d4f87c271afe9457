"""Run the identity registry the way the CLI does, and show one failure."""

import dataclasses

from htdet import verify

reports, status = verify.run_all(max_n=10)
for rep in reports:
    print(rep.summary())
print("exit status:", status)

# Shift the right-hand side of one identity by one index: every check fails.
spec = verify.get_identity("thm1.e1")
broken = dataclasses.replace(spec, rhs=dataclasses.replace(spec.rhs, shift=spec.rhs.shift + 1))
reports, status = verify.run_all(max_n=6, registry=[broken])
print("\n" + reports[0].summary(), "-> exit status", status)
print(reports[0].records[0])
