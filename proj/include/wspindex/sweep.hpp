#pragma once

#include <vector>

#include "wspindex/index.hpp"
#include "wspindex/qpoly.hpp"
#include "wspindex/wspin.hpp"

namespace wspindex {

// One decorated structure out of a decoration sweep: the tuple indexes the
// sorted element list of H, one entry per marked point.
struct SweepCase {
    std::vector<std::size_t> decoration;
    long long genus = 0;
    bool accepted = false;
    std::vector<long long> line_degrees;   // per j, when accepted
    std::vector<long long> totals;         // smooth total index per j, when accepted
};

struct SweepRequest {
    const QPoly* poly = nullptr;
    const SymmetryGroup* group = nullptr;
    long long genus = 0;
    std::size_t k = 0;
    long long cap = 10000; // lexicographic-first tuples examined
};

struct SweepSummary {
    std::size_t examined = 0;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    bool truncated = false;        // cap cut the enumeration short
    std::vector<SweepCase> records; // lexicographic decoration order
};

// Enumerates decoration tuples in lexicographic order, validates the
// selection rule, and evaluates the smooth total index (all three internal
// routes) for every accepted structure.
//
// The serial version is the reference; the parallel version fans the case
// list out across threads and writes into pre-assigned slots, so its output
// is identical and order-stable regardless of scheduling.
SweepSummary run_sweep_serial(const SweepRequest& request);
SweepSummary run_sweep_parallel(const SweepRequest& request);

// Decode a lexicographic case id into a decoration tuple (most significant
// digit first).
std::vector<std::size_t> decode_decoration(unsigned long long case_id, std::size_t k,
                                           std::size_t group_order);

} // namespace wspindex
