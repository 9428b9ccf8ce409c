"""
Families of closed sets and closures inside a family
====================================================

The nonempty Scott closed subsets of a poset form a poset of their own under
inclusion; subfamilies can be closed off inside it.
"""

from powerlab import catalog, closure_in_family, gamma, gamma0

A2 = catalog.antichain(2)
V = catalog.vee()

fam = gamma(A2)
print("gamma(A2) =", fam)
print("as a poset:", fam.poset.labels)
print("family JSON:", fam.to_json())
print()

print("gamma0 adds the empty set:", gamma0(V))
print("|gamma(chain of n)| is n:", [len(gamma(catalog.chain(n))) for n in range(1, 7)])
print()

# closing {{a},{b}} inside gamma(A2): {a,b} is neither below a member nor the
# sup of a directed subfamily, so nothing is added
sub = [A2.subset_from_labels(["a"]), A2.subset_from_labels(["b"])]
closed = closure_in_family(fam, sub)
print("closure of {{a},{b}} in gamma(A2):", closed)

# starting from the top member of gamma(V) the lower closure pulls in the
# whole family
fam_v = gamma(V)
print("closure of {V} in gamma(V):", closure_in_family(fam_v, [V.full_mask]))
