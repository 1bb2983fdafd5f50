"""Chords, scales, and circles of fifths in several systems."""

from cayleytones import (
    MAJOR,
    MINOR,
    chord_catalog,
    circle_of_fifths,
    interval_table,
    largest_chord_within_octave,
    scale,
    system_from_factors,
    triad,
)

z12 = system_from_factors(4, 3)

print("catalog on Z_12:")
for entry in chord_catalog(z12)[:6]:
    print(" ", entry.name, entry.steps)

print("C major triad:", triad(z12, 0, MAJOR).notes)
print("largest within octave:", largest_chord_within_octave(z12, 0, MAJOR).notes)
print("major scale:", scale(z12, 0, MAJOR).notes)
print("minor scale:", scale(z12, 0, MINOR).notes)
print("circle of fifths:", circle_of_fifths(z12).sequence)

# the same machinery runs on any valid factor pair
for p, q in [(5, 2), (5, 3), (6, 5)]:
    system = system_from_factors(p, q)
    print(f"Z_{system.n} major:", scale(system, 0, MAJOR).notes)
    print(f"Z_{system.n} minor:", scale(system, 0, MINOR).notes)

print("interval table (Z_12 vs exact ratios):")
for row in interval_table():
    print(f"  {row.index:2d} {row.name:<14} {str(row.pythagorean):>6} off by {row.deviation:.6f}")
