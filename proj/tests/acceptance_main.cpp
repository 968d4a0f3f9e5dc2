// Copyright 2026 The cu-lattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance runner: one line per criterion, exit 1 if any fails.
#include <iostream>

#include <CLI11.hpp>

#include "cu/acceptance.hpp"

int main(int argc, char** argv) {
  cu::acceptance::Options opts;
  CLI::App app{"cu-lattice acceptance criteria"};
  app.add_option("--seed", opts.seed, "Seed for sampled checks");
  app.add_option("--trials", opts.trials, "Sampled trials");
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const auto& r : cu::acceptance::run_all(opts)) {
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " (" << r.name << "): " << r.detail
              << "  [" << static_cast<long long>(r.elapsed_ms) << " ms]" << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
