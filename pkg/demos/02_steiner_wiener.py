"""Steiner distances and the m-Steiner Wiener index from first principles.

Run with: python demos/02_steiner_wiener.py
"""

import itertools

from twindex import (
    steiner_distance,
    steiner_distance_bruteforce,
    steiner_wiener_naive,
    wiener_index,
)
from twindex.generators import cycle_graph, path_graph, wheel_graph

p4 = path_graph(4)
print("path on 4 vertices:")
print("  d({0,3})   =", steiner_distance(p4, {0, 3}), "(the whole path)")
print("  d({0,1,3}) =", steiner_distance(p4, {0, 1, 3}))
print("  d({2})     =", steiner_distance(p4, {2}), "(a single terminal is free)")

c6 = cycle_graph(6)
print("\n6-cycle, every 3-subset (dynamic program vs brute force):")
for s in itertools.combinations(range(6), 3):
    dp = steiner_distance(c6, s)
    bf = steiner_distance_bruteforce(c6, s)
    assert dp == bf
    print(f"  S={set(s)}: {dp}")

# SW_2 is the classical Wiener index; higher m sums Steiner distances of
# larger subsets.
w = wheel_graph(6)
print("\nwheel with a 6-cycle rim:")
print("  W (= SW_2) =", wiener_index(w), "=", steiner_wiener_naive(w, 2))
for m in range(3, 6):
    print(f"  SW_{m}      =", steiner_wiener_naive(w, m))
