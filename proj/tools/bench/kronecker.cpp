// Copyright 2026 The modpoly Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Times schoolbook against Kronecker products of polynomials over R to pick
// the crossover in g_kronecker_threshold.
//
//   bench_kronecker [p] [precision]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ringarith/poly.hpp"

using namespace mp;

namespace {

RPoly random_rpoly(Rng& rng, size_t n, size_t prec) {
  std::vector<Artin> c;
  for (size_t i = 0; i < n; ++i) {
    Artin a(prec);
    for (size_t k = 0; k < prec; ++k) a[k] = random_fp2(rng);
    c.push_back(a);
  }
  return RPoly(c);
}

template <class P>
double time_mul(const P& a, const P& b, int threshold) {
  g_kronecker_threshold = threshold;
  int reps = 0;
  auto t0 = std::chrono::steady_clock::now();
  double el = 0;
  do {
    volatile size_t sink = (a * b).c.size();
    (void)sink;
    ++reps;
    el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } while (el < 0.2);
  return el / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const uint64_t p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7487;
  const size_t prec = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 15;
  FieldScope fs(p);
  Rng rng(1);
  std::printf("p = %llu, precision %zu\n%6s %14s %14s\n", static_cast<unsigned long long>(p), prec, "n",
              "schoolbook us", "kronecker us");
  for (size_t n : {2, 3, 4, 8, 16, 24, 32, 48, 64, 96, 128}) {
    RPoly a = random_rpoly(rng, n, prec), b = random_rpoly(rng, n, prec);
    const double s = time_mul(a, b, 1 << 30), k = time_mul(a, b, 1);
    std::printf("%6zu %14.1f %14.1f\n", n, s * 1e6, k * 1e6);
  }
  std::printf("F_{p^2}\n");
  for (size_t n : {2, 4, 8, 16, 24, 32, 48, 64}) {
    std::vector<Fp2> x, y;
    for (size_t i = 0; i < n; ++i) {
      x.push_back(random_fp2(rng));
      y.push_back(random_fp2(rng));
    }
    Poly<Fp2> a(x), b(y);
    const double s = time_mul(a, b, 1 << 30), k = time_mul(a, b, 1);
    std::printf("%6zu %14.2f %14.2f\n", n, s * 1e6, k * 1e6);
  }
}
