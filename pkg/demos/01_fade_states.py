"""Where does a relay map break down?  Singular fade states.

During the multiple-access phase the relay hears x_A + s*x_B, where s is the
ratio of the two uplink gains.  For most s the M^2 superpositions are
distinct; at a singular fade state two of them collide and the relay cannot
tell the colliding symbol pairs apart no matter how clever its decoder is.
This script enumerates those states for a few constellations.
"""

from lsnc import (
    effective_constellation,
    enumerate_singular_fade_states,
    make_psk,
    make_square_qam,
    psk_singular_fade_states,
)

qam4 = make_square_qam(4)

print("=== 4-QAM ===")
states = enumerate_singular_fade_states(qam4)
print(f"{len(states)} nonzero singular fade states:")
for fs in states:
    print(f"  s = {fs.value:+.2f}   |s| = {fs.radius:.4f}")

print()
print("The effective constellation at s = (1+j)/2 collapses:")
points, dmin = effective_constellation(qam4, 0.5 + 0.5j)
print(f"  {len(points)} distinct points instead of 16, min distance {dmin}")

print()
print("At a generic fade state nothing collides:")
points, dmin = effective_constellation(qam4, 0.3 + 0.1j)
print(f"  {len(points)} distinct points, min distance {dmin:.4f}")

print()
print("=== M-PSK ===")
print("For M-PSK the count follows (M^2/4 - M/2 + 1) * M:")
for m in (8, 16):
    states = psk_singular_fade_states(m)
    formula = (m * m // 4 - m // 2 + 1) * m
    radii = sorted({round(fs.radius, 9) for fs in states})
    print(f"  {m:>2}-PSK: {len(states)} states (formula {formula}) "
          f"on {len(radii)} circles")

print()
print("Each PSK state is tagged with its circle pair (k, l): |s| equals")
print("sin(pi k/M) / sin(pi l/M), and one representative per (k, l) is")
print("enough — rotating a removing Latin square's columns reaches the rest.")
eight = make_psk(8)
reps = [fs for fs in psk_singular_fade_states(8) if (fs.k, fs.l) == (1, 3)]
print(f"  8-PSK carries {len(reps)} states on the (k=1, l=3) circle.")
