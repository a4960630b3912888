/* Copyright 2026 The chevalley authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <benchmark/benchmark.h>

#include "chevalley/lparam.hpp"
#include "chevalley/sample.hpp"

using namespace chevalley;

namespace {

void BM_WeylEnumeration(benchmark::State& state, const char* spec) {
  RootDatum d = build_datum(spec);
  for (auto _ : state) {
    auto w = WeylGroup::create(d);
    benchmark::DoNotOptimize(w->order());
  }
}
BENCHMARK_CAPTURE(BM_WeylEnumeration, A3, "A3");
BENCHMARK_CAPTURE(BM_WeylEnumeration, B3, "B3");
BENCHMARK_CAPTURE(BM_WeylEnumeration, D4, "D4");
BENCHMARK_CAPTURE(BM_WeylEnumeration, F4, "F4")->Unit(benchmark::kMillisecond);

void BM_TitsMul(benchmark::State& state, const char* spec) {
  auto ctx = make_tits_context(build_datum(spec));
  const auto& els = ctx->weyl->elements();
  std::vector<ExtTitsElem> xs;
  for (std::size_t k = 0; k < els.size(); ++k) {
    RatVec mu(ctx->rank());
    mu[0] = Rational(static_cast<std::int64_t>(k % 4), 4);
    xs.push_back(make_tits(ctx, mu, els[k], static_cast<int>(k % 2)));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tits_mul(xs[k % xs.size()], xs[(7 * k + 3) % xs.size()]));
    ++k;
  }
}
BENCHMARK_CAPTURE(BM_TitsMul, A2, "A2 sc");
BENCHMARK_CAPTURE(BM_TitsMul, B3, "B3");
BENCHMARK_CAPTURE(BM_TitsMul, F4, "F4");

void BM_VerifyContragredient(benchmark::State& state, const char* spec, const char* inner) {
  auto L = build_lgroup(build_datum(spec), inner);
  ParamSampler s(L, 1);
  std::vector<LParam> ps;
  for (int k = 0; k < 32; ++k) ps.push_back(s.next_normal());
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_contragredient(ps[k++ % ps.size()]).all_passed());
  }
}
BENCHMARK_CAPTURE(BM_VerifyContragredient, A1, "A1 sc", "split");
BENCHMARK_CAPTURE(BM_VerifyContragredient, A2_compact, "A2 sc", "compact");
BENCHMARK_CAPTURE(BM_VerifyContragredient, B2, "B2", "split");
BENCHMARK_CAPTURE(BM_VerifyContragredient, GL3, "GL(3)", "split");

}  // namespace

BENCHMARK_MAIN();
