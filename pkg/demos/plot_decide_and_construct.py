"""
Deciding and constructing
=========================

Every valid Circ(n; 2, 3, c) is either sent to a short non-hamiltonian
witness or handed to one of the constructive routes, and whatever comes back
is run through the certificate verifier before it is returned.
"""
from circham import Instance, build, classify, decode_cert, encode_cert, verify_cycle

###############################################################################
# The classifier
# --------------
# Only two values of c can fail, and only when n is a multiple of 6.

for n, c in [(12, 8), (12, 9), (18, 12), (18, 11), (24, 14), (25, 14)]:
    result = classify(Instance(n, c))
    print(f"Circ({n};2,3,{c}):", result.verdict.value, result.witness or "")

###############################################################################
# Building a cycle
# ----------------
# ``build`` picks a route from n and c. The certificate is a start vertex plus
# the step taken out of each vertex in turn.

for n, c in [(6, 5), (12, 10), (24, 15), (24, 7), (24, 19), (18, 11)]:
    res = build(n, c)
    print(f"{str(res.instance):16} {res.method.value:15} {res.cert.vertices()[:12]}")

###############################################################################
# What a non-hamiltonian answer looks like

res = build(18, 12)
print(res.kind, "-", res.witness)

###############################################################################
# Certificates survive a round trip through text

cert = build(36, 15).cert
text = encode_cert(cert)
print(text)
assert decode_cert(text) == cert and verify_cycle(cert) is None

###############################################################################
# Tampering is caught
# -------------------
# Swapping two steps usually revisits a vertex before the tour closes.

steps = list(cert.steps)
steps[0], steps[1] = steps[1], steps[0]
bad = type(cert)(cert.instance, cert.start, tuple(steps))
print("tampered:", verify_cycle(bad))
