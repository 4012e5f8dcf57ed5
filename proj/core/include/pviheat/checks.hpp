#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pviheat/theta.hpp"

namespace pviheat {

/// Outcome of one named certification.  status "pass" means every witness was
/// the exactly-zero rational function (or the template equality held); "fail"
/// means an identity did not hold; "error" covers usage and internal faults.
struct CheckReport {
    std::string check_name;
    std::string status;
    std::string detail;
    std::string witness_digest;
    std::int64_t elapsed_ms = 0;
};

/// The certification suite, in canonical order:
/// compat, gauge, residues, hamiltonian, apparent, eliminate, F, heat, picard.
const std::vector<std::string>& check_names();

/// Runs one named check at the given parameter point.  The seed drives the
/// probabilistic pre-filter only; the verdict always comes from the exact test.
CheckReport run_check(const std::string& name, const Theta& theta,
                      std::uint64_t seed = 0);

std::vector<CheckReport> run_all_checks(const Theta& theta, std::uint64_t seed = 0);

}  // namespace pviheat
