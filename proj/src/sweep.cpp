#include "wspindex/sweep.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wspindex {

std::vector<std::size_t> decode_decoration(unsigned long long case_id, std::size_t k,
                                           std::size_t group_order) {
    std::vector<std::size_t> tuple(k, 0);
    for (std::size_t pos = k; pos-- > 0;) {
        tuple[pos] = (std::size_t)(case_id % group_order);
        case_id /= group_order;
    }
    return tuple;
}

namespace {

unsigned long long case_count(std::size_t k, std::size_t group_order, long long cap,
                              bool& truncated) {
    if (cap <= 0) throw ValidationError("sweep cap must be positive");
    __int128 total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= (__int128)group_order;
        if (total > cap) break;
    }
    truncated = total > cap;
    return truncated ? (unsigned long long)cap : (unsigned long long)total;
}

SweepCase evaluate_case(const SweepRequest& request, unsigned long long case_id) {
    const QPoly& poly = *request.poly;
    const auto& elements = request.group->all_elements();

    SweepCase record;
    record.genus = request.genus;
    record.decoration = decode_decoration(case_id, request.k, elements.size());

    DecoratedOrbicurve curve;
    curve.genus = request.genus;
    curve.points.reserve(request.k);
    for (std::size_t idx : record.decoration)
        curve.points.push_back(MarkedPoint::make(elements[idx]));

    auto validation = validate_structure(curve, poly);
    record.accepted = validation.ok;
    if (!validation.ok) return record;

    for (const auto& line : validation.lines) {
        record.line_degrees.push_back(line_degree(line));
        record.totals.push_back(smooth_total_index(line).total);
    }
    return record;
}

} // namespace

SweepSummary run_sweep_serial(const SweepRequest& request) {
    if (!request.poly || !request.group) throw ValidationError("sweep needs a polynomial and group");
    SweepSummary summary;
    unsigned long long n =
        case_count(request.k, request.group->all_elements().size(), request.cap,
                   summary.truncated);
    summary.records.resize((std::size_t)n);
    for (unsigned long long i = 0; i < n; ++i)
        summary.records[(std::size_t)i] = evaluate_case(request, i);
    summary.examined = (std::size_t)n;
    for (const auto& r : summary.records)
        (r.accepted ? summary.accepted : summary.rejected)++;
    return summary;
}

SweepSummary run_sweep_parallel(const SweepRequest& request) {
    if (!request.poly || !request.group) throw ValidationError("sweep needs a polynomial and group");
    SweepSummary summary;
    unsigned long long n =
        case_count(request.k, request.group->all_elements().size(), request.cap,
                   summary.truncated);
    summary.records.resize((std::size_t)n);

    std::exception_ptr first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long i = 0; i < (long long)n; ++i) {
        try {
            summary.records[(std::size_t)i] = evaluate_case(request, (unsigned long long)i);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    summary.examined = (std::size_t)n;
    for (const auto& r : summary.records)
        (r.accepted ? summary.accepted : summary.rejected)++;
    return summary;
}

} // namespace wspindex
