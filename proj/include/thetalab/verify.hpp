#pragma once

// End-to-end verification bundles.  Each suite runs a family of exact checks
// and reports one result per check; a failing check carries the first
// counterexample (or the thrown error) in `detail`.  The CLI `verify`
// subcommand and the acceptance runner are thin wrappers over these.

#include <string>
#include <vector>

namespace theta {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> verify_counts();           // label counting, closed forms
std::vector<CheckResult> verify_kl_examples();      // frozen small tables
std::vector<CheckResult> verify_wgraphs();          // graphs, cells, glued graph
std::vector<CheckResult> verify_fourier_maps();     // transform tables and routes
std::vector<CheckResult> verify_transport();        // canonical-basis transport
std::vector<CheckResult> verify_multiplicities();   // fibers vs product formula
std::vector<CheckResult> verify_theta_unsigned();   // plain character identity
std::vector<CheckResult> verify_theta_signed();     // signed dims + characters
std::vector<CheckResult> verify_convolution();      // finite-field Hecke action
std::vector<CheckResult> verify_fourier_oracle();   // finite Fourier transform
std::vector<CheckResult> verify_algebra();          // relations and basis asserts

std::vector<std::string> suite_names();
// run one suite by name; throws std::invalid_argument on an unknown name
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace theta
