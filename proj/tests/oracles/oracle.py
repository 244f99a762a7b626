# Copyright 2026 The wittzeta Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


# Brute-force oracles used to freeze expected values in the C++ tests.
import itertools
from sympy import symbols, series, Rational, Poly, GF, factorint
from sympy import binomial

def proj_points(p, n):
    pts = []
    for v in itertools.product(range(p), repeat=n + 1):
        nz = [c for c in v if c]
        if nz and next(c for c in v if c) == 1:
            pts.append(v)
    return pts

# Elliptic curve y^2 z = x^3 + x z^2 + z^3 over F_5
N1 = sum(1 for (x, y, z) in proj_points(5, 2)
         if (y * y * z - x ** 3 - x * z * z - z ** 3) % 5 == 0)
print("E/F5 N1 =", N1, "a =", 6 - N1)

# x^2+y^2-1 over F_3
print("circle F3:", sum(1 for x in range(3) for y in range(3) if (x*x+y*y-1) % 3 == 0))

t = symbols('t')
def coeffs(expr, n):
    s = series(expr, t, 0, n + 1).removeO()
    return [s.coeff(t, i) for i in range(n + 1)]

print("inv(1+2t+t^2):", coeffs(1 / (1 + 2*t + t**2), 2))
print("1/((1-t)(1-3t)):", coeffs(1 / ((1 - t)*(1 - 3*t)), 8))
a = 6 - N1
print("E zeta:", coeffs((1 - a*t + 5*t**2) / ((1 - t)*(1 - 5*t)), 6))
# counts N_m from zeta: N_m = 1 + 5^m - (alpha^m + beta^m)
import sympy
al, be = sympy.symbols('al be')
roots = sympy.solve(sympy.Symbol('x')**2 - a*sympy.Symbol('x') + 5, sympy.Symbol('x'))
Nm = [sympy.nsimplify(sympy.expand(1 + 5**m - (roots[0]**m + roots[1]**m))) for m in range(1, 7)]
print("E N_m:", Nm)
print("P1xP1 F2 zeta:", coeffs(1 / ((1 - t)*(1 - 2*t)**2*(1 - 4*t)), 6))
print("P1xA1 F2 zeta:", coeffs(1 / ((1 - 2*t)*(1 - 4*t)), 6))
print("sigma2(3):", binomial(4, 2))

# Brute-force N_2 of E over F_25 = F_5[w]/(w^2 - 2), independent of the zeta formula.
def f25_mul(a, b):
    return ((a[0]*b[0] + 2*a[1]*b[1]) % 5, (a[0]*b[1] + a[1]*b[0]) % 5)
def f25_add(a, b):
    return ((a[0]+b[0]) % 5, (a[1]+b[1]) % 5)
F25 = [(x, y) for x in range(5) for y in range(5)]
ZERO, ONE = (0, 0), (1, 0)
def neg(a): return ((-a[0]) % 5, (-a[1]) % 5)
cnt = 0
for v in itertools.product(F25, repeat=3):
    nz = [c for c in v if c != ZERO]
    if not nz or nz[0] != ONE:
        continue
    x, y, z = v
    lhs = f25_mul(f25_mul(y, y), z)
    rhs = f25_add(f25_add(f25_mul(f25_mul(x, x), x), f25_mul(x, f25_mul(z, z))), f25_mul(f25_mul(z, z), z))
    if f25_add(lhs, neg(rhs)) == ZERO:
        cnt += 1
print("E/F25 N2 brute force:", cnt)
