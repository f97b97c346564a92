// SPDX-License-Identifier: Apache-2.0
#ifndef HERMITIAN_VERIFICATION_HPP
#define HERMITIAN_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hermitian/closed_form.hpp"
#include "hermitian/counting.hpp"

namespace hermitian {

struct VerifyConfig {
    std::vector<std::uint64_t> primes = {2, 3};
    unsigned k_max = 2;
    unsigned t_max = 2;
    std::uint64_t field_cap = std::uint64_t{1} << 12;  // p^n cap for enumeration suites
    std::uint64_t n_max = 0;                           // 0 = derive from field_cap
    Budgets budgets;
    unsigned threads = 1;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> notes;  // deterministic, ordered
};

struct VerifyReport {
    std::vector<CountRecord> records;          // closed counts, oracle-agreed
    std::vector<DiscrepancyRow> discrepancies; // printed-formula audit rows
    std::vector<SuiteResult> suites;

    // True iff every suite other than the printed-formula audit has zero
    // failures. Audit mismatches are findings, not failures.
    bool passed() const;
};

VerifyReport run_verify(const VerifyConfig& config);

}  // namespace hermitian

#endif
