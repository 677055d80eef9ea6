#pragma once

// Embedded copies of the shipped fixture files.
// Generated together with the fixtures/ directory; a test asserts
// the embedded text matches the shipped files byte-for-byte.

#include <map>
#include <string>

namespace coframe {

inline const std::map<std::string, std::string>& fixture_files() {
  static const std::map<std::string, std::string> files = {
    {"h.alg",
R"FIXTURE(algebra h
# five-dimensional solvable example
form theta1 theta2 theta3 theta4 theta5
ideal theta1 theta2 theta3 theta4 theta5
closed zeta = theta1
d theta1 = 0
d theta2 = -theta1 ^ theta2
d theta3 = theta1 ^ theta3
d theta4 = 2 * theta1 ^ theta4
d theta5 = theta2 ^ theta3
)FIXTURE"},
    {"pkz.alg",
R"FIXTURE(algebra pkz
# potential Khokhlov-Zabolotskaya symmetry algebra; sigma_jk written s11..s23 (curated)
form theta0 theta1 theta2 theta3 xi1 xi2 xi3 s11 s12 s13 s22 s23 eta1 eta2 eta3 eta4 eta5 eta6 eta7 eta8
prolongation eta9 eta10 eta11 eta12 eta13
ideal theta0 theta1 theta2 theta3 xi1 xi2 xi3 s11 s12 s13 s22 s23 eta1 eta2 eta3 eta4 eta5 eta6 eta7 eta8
closed zeta = 3 * eta1 + eta2
d theta0 = -theta0 ^ eta1 - theta1 ^ xi1 - theta2 ^ xi2 - theta3 ^ xi3
d theta1 = -theta0 ^ xi2 - theta0 ^ s22 - theta1 ^ eta1 + theta1 ^ eta2 + 2 * theta3 ^ eta3 + xi1 ^ s11 + xi2 ^ s12 + xi3 ^ s13
d theta2 = -1/2 * theta2 ^ eta1 + 1/2 * theta2 ^ eta2 + xi1 ^ s12 + xi2 ^ s22 + xi3 ^ s23
d theta3 = theta2 ^ eta3 - 3/4 * theta3 ^ eta1 + 3/4 * theta3 ^ eta2 + xi1 ^ s13 + xi2 ^ s23 + xi3 ^ s12
d xi1 = -xi1 ^ eta2
d xi2 = -theta2 ^ xi1 - 1/2 * xi2 ^ eta1 - 1/2 * xi2 ^ eta2 - xi3 ^ eta3
d xi3 = -2 * xi1 ^ eta3 - 1/4 * xi3 ^ eta1 - 3/4 * xi3 ^ eta2
d s11 = -theta0 ^ theta2 + theta0 ^ eta4 - 5 * theta1 ^ xi2 - 5 * theta1 ^ s22 + theta2 ^ s12 - 2 * theta3 ^ s23 - xi1 ^ eta8 - xi2 ^ eta6 - xi3 ^ eta7 - s11 ^ eta1 + 2 * s11 ^ eta2 + 4 * s13 ^ eta3
d s12 = -2 * theta2 ^ xi2 - theta2 ^ s22 - xi1 ^ eta6 - xi2 ^ eta4 - xi3 ^ eta5 - 1/2 * s12 ^ eta1 + 3/2 * s12 ^ eta2 + 2 * s23 ^ eta3
d s13 = -3 * theta3 ^ xi2 - 3 * theta3 ^ s22 - xi1 ^ eta7 - xi2 ^ eta5 - xi3 ^ eta6 + 3 * s12 ^ eta3 - 3/4 * s13 ^ eta1 + 7/4 * s13 ^ eta2
d s22 = -xi1 ^ eta4 + 1/2 * xi2 ^ eta1 + 3/2 * xi2 ^ eta2 + xi3 ^ eta3 + s22 ^ eta2
d s23 = -theta2 ^ xi3 - xi1 ^ eta5 + xi2 ^ eta3 - xi3 ^ eta4 + s22 ^ eta3 - 1/4 * s23 ^ eta1 + 5/4 * s23 ^ eta2
d eta1 = xi1 ^ xi2 + xi1 ^ s22
d eta2 = -3 * xi1 ^ xi2 - 3 * xi1 ^ s22
d eta3 = -xi1 ^ s23 + xi2 ^ xi3 - xi3 ^ s22 + 1/4 * eta1 ^ eta3 - 1/4 * eta2 ^ eta3
d eta4 = -1/2 * theta2 ^ eta1 - 3/2 * theta2 ^ eta2 - xi1 ^ eta9 + xi2 ^ s22 + xi3 ^ s23 - 2 * eta2 ^ eta4
d eta5 = -3 * theta2 ^ eta3 - xi1 ^ eta10 - 3 * xi2 ^ s23 - xi3 ^ s12 - xi3 ^ eta9 - 3 * s22 ^ s23 + 1/4 * eta1 ^ eta5 - 9/4 * eta2 ^ eta5 - 3 * eta3 ^ eta4
d eta6 = -xi1 ^ eta11 - 7 * xi2 ^ s12 - xi2 ^ eta9 - xi3 ^ eta10 + 6 * s12 ^ s22 + 1/2 * eta1 ^ eta6 - 5/2 * eta2 ^ eta6 - 4 * eta3 ^ eta5
d eta7 = -3 * theta2 ^ theta3 + theta2 ^ eta5 - 3 * theta3 ^ eta4 - xi1 ^ eta12 - 9 * xi2 ^ s13 - xi2 ^ eta10 - xi3 ^ eta11 + 3 * s12 ^ s23 + 9 * s13 ^ s22 + 3/4 * eta1 ^ eta7 - 11/4 * eta2 ^ eta7 - 5 * eta3 ^ eta6
d eta8 = theta0 ^ s12 + theta0 ^ eta9 + 6 * theta1 ^ theta2 - 6 * theta1 ^ eta4 + 2 * theta2 ^ eta6 - 2 * theta3 ^ eta5 - xi1 ^ eta13 - 12 * xi2 ^ s11 - xi2 ^ eta11 - xi3 ^ eta12 + 12 * s11 ^ s22 + 6 * s13 ^ s23 + eta1 ^ eta8 - 3 * eta2 ^ eta8 - 6 * eta3 ^ eta7
)FIXTURE"},
    {"pkz_raw.alg",
R"FIXTURE(algebra pkz_raw
# potential Khokhlov-Zabolotskaya symmetry algebra; sigma_jk written s11..s23 (raw transcription)
form theta0 theta1 theta2 theta3 xi1 xi2 xi3 s11 s12 s13 s22 s23 eta1 eta2 eta3 eta4 eta5 eta6 eta7 eta8
prolongation eta9 eta10 eta11 eta12 eta13
ideal theta0 theta1 theta2 theta3 xi1 xi2 xi3 s11 s12 s13 s22 s23 eta1 eta2 eta3 eta4 eta5 eta6 eta7 eta8
closed zeta = 3 * eta1 + eta2
d theta0 = -theta0 ^ eta1 - theta1 ^ xi1 - theta2 ^ xi2 - theta3 ^ xi3
d theta1 = -theta0 ^ xi2 - theta0 ^ s22 - theta1 ^ eta1 + theta1 ^ eta2 + 2 * theta3 ^ eta3 + xi1 ^ s11 + xi2 ^ s12 + xi3 ^ s13
d theta2 = -1/2 * theta2 ^ eta1 + 1/2 * theta2 ^ eta2 + xi1 ^ s12 + xi2 ^ s22 + xi3 ^ s23
d theta3 = theta2 ^ eta3 - 9/4 * theta3 ^ eta1 + 9/4 * theta3 ^ eta2 + xi1 ^ s13 + xi2 ^ s23 + xi3 ^ s12
d xi1 = -xi1 ^ eta2
d xi2 = -theta2 ^ xi1 - 1/2 * xi2 ^ eta1 - 1/2 * xi2 ^ eta2 - xi3 ^ eta3
d xi3 = -2 * xi1 ^ eta3 - 1/4 * xi3 ^ eta1 - 3/4 * xi3 ^ eta2
d s11 = -theta0 ^ theta2 + theta0 ^ eta4 - 5 * theta1 ^ xi2 - 5 * theta1 ^ s22 + theta2 ^ s12 - 2 * theta3 ^ s23 - xi1 ^ eta8 - xi2 ^ eta6 - xi3 ^ eta7 - s11 ^ eta1 + 2 * s11 ^ eta2 + 4 * s13 ^ eta3
d s12 = -2 * theta2 ^ xi2 - 2 * theta2 ^ s22 - xi1 ^ eta6 - xi2 ^ eta4 - xi3 ^ eta5 - 1/2 * s12 ^ eta1 + 3/2 * s12 ^ eta2 + 2 * s23 ^ eta3
d s13 = -3 * theta3 ^ xi2 - 3 * theta3 ^ s22 - xi1 ^ eta7 - xi2 ^ eta5 - xi3 ^ eta6 + 3 * s12 ^ eta3 - 9/4 * s13 ^ eta1 + 21/4 * s13 ^ eta2
d s22 = -xi1 ^ eta4 + 1/2 * xi2 ^ eta1 + 3/2 * xi2 ^ eta2 + xi3 ^ eta3 + s22 ^ eta2
d s23 = -theta2 ^ xi3 - xi1 ^ eta5 + xi2 ^ eta3 - xi3 ^ eta4 + s22 ^ eta3 - 1/4 * s23 ^ eta1 + 5/4 * s23 ^ eta2
d eta1 = xi1 ^ xi2 + xi1 ^ s22
d eta2 = -3 * xi1 ^ xi2 - 3 * xi1 ^ s22
d eta3 = -xi1 ^ s23 + xi2 ^ xi3 - xi3 ^ s22 + 1/4 * eta1 ^ eta3 - 1/4 * eta2 ^ eta3
d eta4 = -1/2 * theta2 ^ eta1 - 3/2 * theta2 ^ eta2 - xi1 ^ eta9 + xi2 ^ s22 + xi3 ^ s23 - 2 * eta2 ^ eta4
d eta5 = -3 * theta2 ^ eta3 - xi1 ^ eta10 - 3 * xi2 ^ s23 - xi3 ^ s12 - xi3 ^ eta9 - 3 * s22 ^ s23 + 1/4 * eta1 ^ eta5 - 9/4 * eta2 ^ eta5 - 3 * eta3 ^ eta4
d eta6 = -xi1 ^ eta11 - 7 * xi2 ^ s12 - xi2 ^ eta9 - xi3 ^ eta10 + 6 * s12 ^ s22 + 1/2 * eta1 ^ eta6 - 5/2 * eta2 ^ eta6 - 4 * eta3 ^ eta5
d eta7 = -3 * theta2 ^ theta3 + theta2 ^ eta5 - 3 * theta3 ^ eta4 - xi1 ^ eta12 - 9 * xi2 ^ s13 - xi2 ^ eta10 - xi3 ^ eta11 + 3 * s12 ^ s23 + 9 * s13 ^ s22 + 3/4 * eta1 ^ eta7 - 11/4 * eta2 ^ eta7 - 5 * eta3 ^ eta6
d eta8 = theta0 ^ s12 + theta0 ^ eta9 + 6 * theta1 ^ theta2 - 6 * theta1 ^ eta4 + 2 * theta2 ^ eta6 - 2 * theta3 ^ eta5 - xi1 ^ eta13 - 12 * xi2 ^ s11 - xi2 ^ eta11 - xi3 ^ eta12 + 12 * s11 ^ s22 + 6 * s13 ^ s23 + eta1 ^ eta8 - 3 * eta2 ^ eta8 - 6 * eta3 ^ eta7
)FIXTURE"},
    {"bf.alg",
R"FIXTURE(algebra bf
# Boyer-Finley symmetry algebra; sigma_jk written s11..s33 (curated)
form theta0 theta1 theta2 theta3 xi1 xi2 xi3 s11 s13 s22 s23 s33 eta1 eta2 eta3 eta4 eta5
prolongation eta6 eta7 eta8 eta9
ideal theta0 theta1 theta2 theta3 xi1 xi2 xi3 s11 s13 s22 s23 s33 eta1 eta2 eta3 eta4 eta5
closed zeta = s33 - theta3
d theta0 = theta0 ^ theta3 - theta0 ^ s33 - theta1 ^ xi1 - theta2 ^ xi2 - theta3 ^ xi3
d theta1 = -theta1 ^ eta1 + xi1 ^ s11 + xi2 ^ s33 + xi3 ^ s13
d theta2 = theta2 ^ theta3 + theta2 ^ xi3 + theta2 ^ eta1 + xi1 ^ s33 + xi2 ^ s22 + xi3 ^ s23
d theta3 = theta3 ^ xi3 + xi1 ^ s13 + xi2 ^ s23 + xi3 ^ s33
d xi1 = -theta3 ^ xi1 - xi1 ^ s33 + xi1 ^ eta1
d xi2 = -xi2 ^ xi3 - xi2 ^ s33 - xi2 ^ eta1
d xi3 = -theta3 ^ xi3 - xi3 ^ s33
d s11 = theta1 ^ xi2 + theta1 ^ s13 + theta3 ^ s11 - xi1 ^ eta3 + xi2 ^ s13 - xi3 ^ eta2 + s11 ^ s33 - 2 * s11 ^ eta1
d s13 = theta3 ^ xi2 + theta3 ^ s13 - xi1 ^ eta2 + xi2 ^ xi3 + 2 * xi2 ^ s33 + s13 ^ s33 - s13 ^ eta1
d s22 = theta2 ^ xi1 + theta2 ^ s23 - theta3 ^ s22 + xi1 ^ s23 - xi2 ^ eta5 - 2 * xi3 ^ s22 - xi3 ^ eta4 + s22 ^ s33 + 2 * s22 ^ eta1
d s23 = theta3 ^ xi1 + xi1 ^ xi3 + 2 * xi1 ^ s33 - xi2 ^ eta4 - xi3 ^ s23 + s23 ^ s33 + s23 ^ eta1
d s33 = theta3 ^ xi3 + xi1 ^ s13 + xi2 ^ s23 + xi3 ^ s33
d eta1 = -xi1 ^ xi2 - xi1 ^ s13
d eta2 = 2 * theta3 ^ eta2 - xi1 ^ eta6 - 2 * s33 ^ eta2 + 2 * eta1 ^ eta2
d eta3 = theta1 ^ eta2 + 2 * theta3 ^ eta3 - xi1 ^ eta7 + 3 * xi2 ^ s11 + xi2 ^ eta2 - xi3 ^ eta6 - 3 * s11 ^ s13 - 2 * s33 ^ eta3 + 3 * eta1 ^ eta3
d eta4 = -xi2 ^ eta8 - 2 * xi3 ^ eta4 - 2 * s33 ^ eta4 - 2 * eta1 ^ eta4
d eta5 = theta2 ^ eta4 - theta3 ^ eta5 + 3 * xi1 ^ s22 + xi1 ^ eta4 - xi2 ^ eta9 - 3 * xi3 ^ eta5 - xi3 ^ eta8 - 3 * s22 ^ s23 - 2 * s33 ^ eta5 - 3 * eta1 ^ eta5
)FIXTURE"},
    {"bf_raw.alg",
R"FIXTURE(algebra bf_raw
# Boyer-Finley symmetry algebra; sigma_jk written s11..s33 (raw transcription)
form theta0 theta1 theta2 theta3 xi1 xi2 xi3 s11 s13 s22 s23 s33 eta1 eta2 eta3 eta4 eta5
prolongation eta6 eta7 eta8 eta9
ideal theta0 theta1 theta2 theta3 xi1 xi2 xi3 s11 s13 s22 s23 s33 eta1 eta2 eta3 eta4 eta5
closed zeta = s33 - theta3
d theta0 = theta0 ^ theta3 - theta0 ^ s33 - theta1 ^ xi1 - theta2 ^ xi2 - theta3 ^ xi3
d theta1 = -theta1 ^ eta1 + xi1 ^ s11 + xi2 ^ s33 + xi3 ^ s13
d theta2 = theta2 ^ theta3 + theta2 ^ xi3 + theta2 ^ eta1 + xi1 ^ s33 + xi2 ^ s22 + xi3 ^ s23
d theta3 = theta3 ^ xi3 + xi1 ^ s13 + xi2 ^ s23 - xi3 ^ s33
d xi1 = -theta3 ^ xi1 - xi1 ^ s33 + xi1 ^ eta1
d xi2 = -xi2 ^ xi3 - xi2 ^ s33 - xi2 ^ eta1
d xi3 = -theta3 ^ xi3 - xi3 ^ s33
d s11 = theta1 ^ xi2 + theta1 ^ s13 + theta3 ^ s11 - xi1 ^ eta3 + xi2 ^ s13 - xi3 ^ eta2 + s11 ^ s33 - 2 * s11 ^ eta1
d s13 = theta3 ^ xi2 + theta3 ^ s13 - xi1 ^ eta2 + xi2 ^ xi3 - 2 * xi2 ^ s33 + s13 ^ s33 - s13 ^ eta1
d s22 = theta2 ^ xi1 + theta2 ^ s23 - theta3 ^ s22 + xi1 ^ s23 - xi2 ^ eta5 - 2 * xi3 ^ s22 - xi3 ^ eta4 + s22 ^ s33 + 2 * s22 ^ eta1
d s23 = theta3 ^ xi1 + xi1 ^ xi3 - 2 * xi1 ^ s33 - xi2 ^ eta4 - xi3 ^ s23 + s23 ^ s33 + s23 ^ eta1
d s33 = theta3 ^ xi3 + xi1 ^ s13 + xi2 ^ s23 + xi3 ^ s33
d eta1 = -xi1 ^ xi2 - xi1 ^ s13
d eta2 = 2 * theta3 ^ eta2 - xi1 ^ eta6 - 2 * s33 ^ eta2 + 2 * eta1 ^ eta2
d eta3 = theta1 ^ eta2 + 2 * theta3 ^ eta3 - xi1 ^ eta7 + 3 * xi2 ^ s11 + xi2 ^ eta2 - xi3 ^ eta6 - 3 * s11 ^ s13 - 2 * s33 ^ eta3 + 3 * eta1 ^ eta3
d eta4 = -xi2 ^ eta8 - 2 * xi3 ^ eta4 - 2 * s33 ^ eta4 - 2 * eta1 ^ eta4
d eta5 = theta2 ^ eta4 - theta3 ^ eta5 + 3 * xi1 ^ s22 + xi1 ^ eta4 - xi2 ^ eta9 - 3 * xi3 ^ eta5 - xi3 ^ eta8 - 3 * s22 ^ s23 - 2 * s33 ^ eta5 - 3 * eta1 ^ eta5
)FIXTURE"},
    {"pkz_raw_vs_curated.json",
R"FIXTURE({
  "algebra": "pkz",
  "schema_version": 1,
  "entries": [
    {
      "generator": "theta3",
      "raw": "theta2 ^ eta3 - 9/4 * theta3 ^ eta1 + 9/4 * theta3 ^ eta2 + xi1 ^ s13 + xi2 ^ s23 + xi3 ^ s12",
      "curated": "theta2 ^ eta3 - 3/4 * theta3 ^ eta1 + 3/4 * theta3 ^ eta2 + xi1 ^ s13 + xi2 ^ s23 + xi3 ^ s12"
    },
    {
      "generator": "s12",
      "raw": "-2 * theta2 ^ xi2 - 2 * theta2 ^ s22 - xi1 ^ eta6 - xi2 ^ eta4 - xi3 ^ eta5 - 1/2 * s12 ^ eta1 + 3/2 * s12 ^ eta2 + 2 * s23 ^ eta3",
      "curated": "-2 * theta2 ^ xi2 - theta2 ^ s22 - xi1 ^ eta6 - xi2 ^ eta4 - xi3 ^ eta5 - 1/2 * s12 ^ eta1 + 3/2 * s12 ^ eta2 + 2 * s23 ^ eta3"
    },
    {
      "generator": "s13",
      "raw": "-3 * theta3 ^ xi2 - 3 * theta3 ^ s22 - xi1 ^ eta7 - xi2 ^ eta5 - xi3 ^ eta6 + 3 * s12 ^ eta3 - 9/4 * s13 ^ eta1 + 21/4 * s13 ^ eta2",
      "curated": "-3 * theta3 ^ xi2 - 3 * theta3 ^ s22 - xi1 ^ eta7 - xi2 ^ eta5 - xi3 ^ eta6 + 3 * s12 ^ eta3 - 3/4 * s13 ^ eta1 + 7/4 * s13 ^ eta2"
    }
  ]
}
)FIXTURE"},
    {"bf_raw_vs_curated.json",
R"FIXTURE({
  "algebra": "bf",
  "schema_version": 1,
  "entries": [
    {
      "generator": "theta3",
      "raw": "theta3 ^ xi3 + xi1 ^ s13 + xi2 ^ s23 - xi3 ^ s33",
      "curated": "theta3 ^ xi3 + xi1 ^ s13 + xi2 ^ s23 + xi3 ^ s33"
    },
    {
      "generator": "s13",
      "raw": "theta3 ^ xi2 + theta3 ^ s13 - xi1 ^ eta2 + xi2 ^ xi3 - 2 * xi2 ^ s33 + s13 ^ s33 - s13 ^ eta1",
      "curated": "theta3 ^ xi2 + theta3 ^ s13 - xi1 ^ eta2 + xi2 ^ xi3 + 2 * xi2 ^ s33 + s13 ^ s33 - s13 ^ eta1"
    },
    {
      "generator": "s23",
      "raw": "theta3 ^ xi1 + xi1 ^ xi3 - 2 * xi1 ^ s33 - xi2 ^ eta4 - xi3 ^ s23 + s23 ^ s33 + s23 ^ eta1",
      "curated": "theta3 ^ xi1 + xi1 ^ xi3 + 2 * xi1 ^ s33 - xi2 ^ eta4 - xi3 ^ s23 + s23 ^ s33 + s23 ^ eta1"
    }
  ]
}
)FIXTURE"},
    {"pkz_covering.pde",
R"FIXTURE(pde pkz
independent t x y
dependent u
solve u_yy = u_tx + u_x*u_xx
covering q fiber x
q_t = 1/3*q_x^3 - u_x*q_x - u_y
q_y = 1/2*q_x^2 - u_x
)FIXTURE"},
    {"pkz_covering_broken.pde",
R"FIXTURE(pde pkz_broken
independent t x y
dependent u
solve u_yy = u_tx + u_x*u_xx
covering q fiber x
q_t = 1/3*q_x^3 - u_x*q_x + u_y
q_y = 1/2*q_x^2 - u_x
)FIXTURE"},
    {"bf_covering.pde",
R"FIXTURE(pde bf
independent t x y
dependent u
solve u_tx = exp(u_y)*u_yy
covering q fiber y
q_t = u_t + exp(q_y)
q_x = -exp(u_y - q_y)
)FIXTURE"},
    {"pkz.mcf",
R"FIXTURE(fixture pkz
algebra pkz
independent t x y
dependent u
parameter a
nonlocal q fiber x
define q_x = u_xxy*u_xxx^(-1) + a^(-1)*u_xxx^(-1/2)
mc xi1 = a^(-1) * d(t)
mc xi2 = a*(u_xxy^2 - u_x*u_xxx^2)*u_xxx^(-1) * d(t) + a*u_xxx * d(x) + a*u_xxy * d(y)
mc xi3 = 2*u_xxy*u_xxx^(-1/2) * d(t) + u_xxx^(1/2) * d(y)
mc theta2 = a^2*u_xxx * d(u_x) - a^2*u_xxx*u_tx * d(t) - a^2*u_xxx*u_xx * d(x) - a^2*u_xxx*u_xy * d(y)
mc theta3 = a^3*u_xxx^(3/2) * d(u_y) - a^3*u_xxx^(3/2)*u_ty * d(t) - a^3*u_xxx^(3/2)*u_xy * d(x) - a^3*u_xxx^(3/2)*(u_tx + u_x*u_xx) * d(y) - a^3*u_xxx^(1/2)*u_xxy * d(u_x) + a^3*u_xxx^(1/2)*u_xxy*u_tx * d(t) + a^3*u_xxx^(1/2)*u_xxy*u_xx * d(x) + a^3*u_xxx^(1/2)*u_xxy*u_xy * d(y)
mc eta1 = 3*a^(-1) * d(a) + 2*u_xxx^(-1) * d(u_xxx) - u_xx * d(t)
mc eta2 = -a^(-1) * d(a) + 3*u_xx * d(t)
mc eta3 = a*u_xxx^(-1/2) * d(u_xxy) - a*u_xxy*u_xxx^(-3/2) * d(u_xxx) + a*(u_xx*u_xxy + u_xy*u_xxx)*u_xxx^(-1/2) * d(t) + a*u_xx*u_xxx^(1/2) * d(y)
cocycle Omega = 1/4 * eta1 ^ xi1 + 1/4 * eta1 ^ xi2 + 1/4 * eta1 ^ xi3 - 1/4 * eta2 ^ xi1 - 1/4 * eta2 ^ xi2 - 1/4 * eta2 ^ xi3 - eta3 ^ xi1 - eta3 ^ xi2 - eta3 ^ xi3 + theta2 ^ xi1 + theta2 ^ xi3 + theta3 ^ xi1
extension omega lambda -1/4 zeta zeta cocycle Omega = a^2*u_xxx^(3/2) * d(q) - a^2*u_xxx^(3/2)*(1/3*q_x^3 - u_x*q_x - u_y) * d(t) - a^2*u_xxx^(3/2)*q_x * d(x) - a^2*u_xxx^(3/2)*(1/2*q_x^2 - u_x) * d(y)
)FIXTURE"},
    {"bf.mcf",
R"FIXTURE(fixture bf
algebra bf
independent t x y
dependent u
parameter a
nonlocal q fiber y
define a = u_yy*exp(q_y)
mc theta1 = u_yy*a^(-1) * d(u_t) - u_yy^2*a^(-1)*exp(u_y) * d(x) - u_yy*u_ty*a^(-1) * d(y)
mc theta3 = d(u_y) - u_ty * d(t) - u_xy * d(x) - u_yy * d(y)
mc xi1 = a * d(t)
mc xi2 = exp(u_y)*u_yy^2*a^(-1) * d(x)
mc xi3 = u_yy * d(y)
mc s33 = u_yy^(-1) * d(u_yy) + d(u_y) - u_ty * d(t) - u_xy * d(x) - u_yy * d(y)
mc eta1 = -a^(-1) * d(a) + u_ty * d(t) + u_yy^(-1) * d(u_yy)
cocycle Omega1 = eta1 ^ xi1 + eta1 ^ xi2 + eta1 ^ xi3 - theta1 ^ xi1 - xi2 ^ xi1 + theta3 ^ xi2 + xi3 ^ xi2
cocycle Omega2 = s33 ^ xi3 - theta3 ^ xi3
extension omega1 lambda -1 zeta zeta cocycle Omega1 = u_yy * d(q) - u_yy*(u_t + exp(q_y)) * d(t) + u_yy*exp(u_y - q_y) * d(x) - u_yy*q_y * d(y)
extension omega2 lambda -1 zeta zeta cocycle Omega2 = u_yy * d(q) + u_yy*ln(u_yy) * d(y)
)FIXTURE"},
  };
  return files;
}

}  // namespace coframe
