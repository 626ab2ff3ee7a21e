// Copyright (c) 2026 The starkscat developers.
// SPDX-License-Identifier: Apache-2.0
//
// Command line driver. Subcommands map one-to-one onto the library's check
// suites; every run is configured by a JSON experiment file plus a handful of
// flags and writes machine-readable CSV/JSON reports.
#include <CLI11.hpp>
#include <cstdio>

int main(int argc, char** argv) {
  CLI::App app{"stationary Stark scattering checks"};
  app.require_subcommand(0, 1);
  CLI11_PARSE(app, argc, argv);
  std::puts("starkscat: no subcommand given (wiring in progress)");
  return 0;
}
