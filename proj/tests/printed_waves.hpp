#pragma once

#include <cmath>
#include <functional>

namespace fixtures {

// Closed trigonometric forms of V(s, (1..m)), m = 1..10, transcribed as
// published.  Floating point; used only for comparison with exact values.
inline double printed_wave(int m, double s) {
  const double pi = M_PI;
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
  auto csc = [](double x) { return 1.0 / std::sin(x); };
  using std::cos;
  using std::pow;
  using std::sin;
  switch (m) {
    case 1:
      return 1.0;
    case 2:
      return s / 2 - sin(pi * s) / 4;
    case 3:
      return s * s / 12 - 7.0 / 72 - cos(pi * s) / 8 + 2.0 / 9 * cos(2 * pi * s / 3);
    case 4:
      return pow(s, 3) / 144 - s / 96 * (5 + 3 * cos(pi * s)) + sin(pi * s / 2) / 8 - 2 / (9 * r3) * sin(2 * pi * s / 3);
    case 5:
      return pow(s, 4) / 2880 - 11 * s * s / 1152 - s / 64 * sin(pi * s) + 17083.0 / 691200 - 2.0 / 27 * cos(2 * pi * s / 3) +
             1 / (8 * r2) * cos(pi * s / 2) + 2.0 / 25 * (-cos(2 * pi * s / 5) + cos(4 * pi * s / 5));
    case 6:
      return pow(s, 5) / 86400 - 91 * pow(s, 3) / 103680 + s * s / 768 * sin(pi * s) +
             s / 829440 * (9191 - 10240 * cos(2 * pi * s / 3)) - 161.0 / 9216 * sin(pi * s) - 1 / (16 * r2) * sin(pi * s / 2) -
             1 / (81 * r3) * sin(2 * pi * s / 3) - 1.0 / 18 * sin(pi * s / 3) -
             2 / (25 * r5) * (sin(pi / 5) * sin(4 * pi * s / 5) + sin(2 * pi / 5) * sin(2 * pi * s / 5));
    case 7:
      return pow(s, 6) / 3628800 - pow(s, 4) / 20736 + s * s / 38400 * (71 + 25 * cos(pi * s)) -
             s / (81 * r3) * sin(2 * pi * s / 3) - 52705.0 / 6096384 - 77.0 / 4608 * cos(pi * s) - 1.0 / 32 * cos(pi * s / 2) -
             5.0 / 486 * cos(2 * pi * s / 3) - 1.0 / 18 * cos(pi * s / 3) +
             2 / (25 * r5) * (cos(2 * pi * s / 5) - cos(4 * pi * s / 5)) +
             2.0 / 49 * (cos(2 * pi * s / 7) + cos(4 * pi * s / 7) + cos(6 * pi * s / 7));
    case 8:
      return pow(s, 7) / 203212800 - 17 * pow(s, 5) / 9676800 + pow(s, 3) / 8294400 * (1343 + 225 * cos(pi * s)) +
             s * (-16133.0 / 4976640 - 1.0 / 256 * cos(pi * s / 2) + 1.0 / 243 * cos(2 * pi * s / 3) - 31.0 / 12288 * cos(pi * s)) +
             1.0 / 32 * (sin(pi * s / 4) - sin(3 * pi * s / 4)) - 1.0 / 128 * sin(pi * s / 2) +
             1 / (162 * r3) * sin(2 * pi * s / 3) + 1 / (18 * r3) * sin(pi * s / 3) +
             4.0 / 125 * (sin(2 * pi / 5) * sin(4 * pi * s / 5) - sin(pi / 5) * sin(2 * pi * s / 5)) -
             1.0 / 49 *
                 (sin(2 * pi * s / 7) * csc(pi / 7) - sin(4 * pi * s / 7) * csc(2 * pi / 7) + sin(6 * pi * s / 7) * csc(3 * pi / 7));
    case 9:
      return pow(s, 8) / 14631321600 - 19 * pow(s, 6) / 418037760 + 145597 * pow(s, 4) / 16721510400 +
             pow(s, 3) / 73728 * sin(pi * s) - s * s * (67293991.0 / 140460687360 + 1.0 / 4374 * cos(2 * pi * s / 3)) -
             s * (1 / (256 * r2) * sin(pi * s / 2) + 1 / (1458 * r3) * sin(2 * pi * s / 3) + 205.0 / 98304 * sin(pi * s)) +
             199596951167.0 / 56184274944000 +
             1.0 / 64 * (cos(pi * s / 4) * csc(pi / 8) - cos(3 * pi * s / 4) * csc(3 * pi / 8)) +
             2.0 / 125 * (cos(4 * pi * s / 5) - cos(2 * pi * s / 5)) - 5 / (512 * r2) * cos(pi * s / 2) +
             257.0 / 17496 * cos(2 * pi * s / 3) + 1 / (36 * r3) * cos(pi * s / 3) +
             2.0 / 81 * (-cos(2 * pi * s / 9) + cos(4 * pi * s / 9) + cos(8 * pi * s / 9)) -
             1.0 / 98 *
                 (cos(2 * pi * s / 7) * csc(pi / 7) * csc(2 * pi / 7) + cos(4 * pi * s / 7) * csc(2 * pi / 7) * csc(3 * pi / 7) +
                  cos(6 * pi * s / 7) * csc(3 * pi / 7) * csc(pi / 7));
    case 10:
      return pow(s, 9) / 1316818944000 - 11 * pow(s, 7) / 12541132800 + 113113 * pow(s, 5) / 358318080000 -
             sin(pi * s) / 2949120 * pow(s, 4) - 18063859 * pow(s, 3) / 468202291200 +
             s * s * (1 / (4374 * r3) * sin(2 * pi * s / 3) + 143.0 / 1179648 * sin(pi * s)) +
             s * (273512277643.0 / 240789749760000 + 1 / (512 * r2) * cos(pi * s / 2) + 7.0 / 13122 * cos(2 * pi * s / 3) +
                  1.0 / 625 * (cos(4 * pi * s / 5) - cos(2 * pi * s / 5))) -
             2877523.0 / 707788800 * sin(pi * s) - 1211 / (52488 * r3) * sin(2 * pi * s / 3) -
             5 / (1024 * r2) * sin(pi * s / 2) - 1.0 / 108 * sin(pi * s / 3) +
             1 / (64 * r2) * (csc(3 * pi / 8) * sin(3 * pi * s / 4) - csc(pi / 8) * sin(pi * s / 4)) +
             1.0 / 50 * (sin(3 * pi * s / 5) - sin(pi * s / 5)) -
             2 * r2 / 625 * ((r5 + 2) / std::sqrt(5 + r5) * sin(2 * pi * s / 5) + (r5 - 2) / std::sqrt(5 - r5) * sin(4 * pi * s / 5)) -
             1.0 / 196 * csc(pi / 7) * csc(2 * pi / 7) * csc(3 * pi / 7) *
                 (sin(6 * pi * s / 7) + sin(4 * pi * s / 7) - sin(2 * pi * s / 7)) +
             1.0 / 81 * (csc(4 * pi / 9) * sin(8 * pi * s / 9) + csc(2 * pi / 9) * sin(4 * pi * s / 9) + csc(pi / 9) * sin(2 * pi * s / 9));
    default:
      return std::nan("");
  }
}

// Closed form of the (1,2,3,4,5) remainder r(s) = rho0 + rho1 cos(2 pi s/5) + rho2 cos(4 pi s/5).
inline double printed_remainder_s5(double s) {
  return 217.0 / 28800 - 2.0 / 25 * std::cos(2 * M_PI * s / 5) + 2.0 / 25 * std::cos(4 * M_PI * s / 5);
}

}  // namespace fixtures
