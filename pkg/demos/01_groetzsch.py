# The Groetzsch graph is the smallest triangle-free graph that needs four colours.
# Here we check that it is minimally non-perfectly-divisible and that its
# minimum degree sits exactly on the lower bound omega + 1.

from perfdiv import certify_minimal, chromatic_number, clique_number, groetzsch, find_division
from perfdiv.verify import check_mnpd_properties

G = groetzsch()
print(G, "omega =", clique_number(G), "chi =", chromatic_number(G))

cert = certify_minimal(G, "mnpd")
print("MNPD:", cert.verdict, "-", cert.evidence["search"])

# no perfect division of the whole graph...
print("division of G:", find_division(G))
# ...but every vertex-deleted subgraph has one
for v in range(3):
    d = find_division(G, G.full & ~(1 << v))
    print(f"G - {v}:", d.to_dict())

report = check_mnpd_properties(G, cert)
print("structure items hold:", report.passed)
print("min degree", report.universe["min_degree"], "= omega + 1 =", report.universe["omega"] + 1)
