"""Monte-Carlo check: sign(hplus - hminus) is opposite to the sign of
(sigma(p2)-sigma(p1)) * (delta(p2)-delta(p1)), with sigma=|z-1|+|z+1| and
delta=|z-1|-|z+1|."""
import cmath
import random


def upper(c):
    s = cmath.sqrt(c)
    return s if s.imag >= 0 else -s


random.seed(1)
bad, N = 0, 20000
sigma = lambda z: abs(z - 1) + abs(z + 1)
delta = lambda z: abs(z - 1) - abs(z + 1)
for _ in range(N):
    p1 = complex(random.uniform(-3, 3), random.uniform(0.01, 3))
    p2 = complex(random.uniform(-3, 3), random.uniform(-3, 3))
    hp = upper((p1 - 1) * (p2 - 1)).imag / 2
    hm = upper((p1 + 1) * (p2 + 1)).imag / 2
    if (hp - hm) * (sigma(p2) - sigma(p1)) * (delta(p2) - delta(p1)) >= 0:
        bad += 1
print("sign rule violations", bad, "of", N)
