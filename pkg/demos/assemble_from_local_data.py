"""Building an expansion at infinity from local data at the finite points.

The assembler takes, for each singular direction, a list of local blocks
(exponent, local series, connection constant) and produces the same
expansion the residue engine computes directly.  The local data serializes
to JSON, so it can come from somewhere else entirely.
"""

import json
from fractions import Fraction

from hyperasym.assembler import (assemble_expansion, kummer_local_data,
                                 local_data_from_json, local_data_to_json)
from hyperasym.asymp import compute_full_expansion
from hyperasym.exact import HyperParams
from hyperasym.hring import h_normalize

a, b = Fraction(1, 3), Fraction(5, 7)
depth = 5

data = kummer_local_data(a, b, depth, "upper")
blob = local_data_to_json(data)
print("local data (JSON, truncated):")
print(json.dumps(blob)[:300], "...")
print()

asm = assemble_expansion(local_data_from_json(blob), depth, "upper")
ref = compute_full_expansion(HyperParams((a,), (b,)), "upper", depth)

print("term-by-term comparison with the direct computation:")
folded = {k: h_normalize(ref.prefactor * c) for k, c in ref.terms.items()}
for key in sorted(asm.terms):
    same = h_normalize(asm.terms[key]) == folded[key]
    rho, beta, logpow = key
    print("  e^{%sx} x^{%s} log^%d : %s" % (rho, beta, logpow,
                                            "match" if same else "DIFFER"))
