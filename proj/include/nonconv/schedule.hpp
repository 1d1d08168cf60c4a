#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nonconv {

// The ell-tuple of strictly increasing index maps q_1 < q_2 < ... < q_ell.
// Affine schedules q_i(n) = a_i n + b_i are the only kind admissible for
// Markov-driven products.
class IndexSchedule {
public:
    enum class Kind { Affine, Table, Custom };

    // a_i >= 1, b_i >= 0, and the maps must be strictly ordered for all n >= 1.
    static IndexSchedule affine(std::vector<std::int64_t> a, std::vector<std::int64_t> b);
    // values[i][n-1] = q_i(n); ordering and monotonicity validated up front.
    static IndexSchedule table(std::vector<std::vector<std::int64_t>> values);
    // Arbitrary evaluators; ordering validated lazily per evaluation.
    static IndexSchedule custom(int ell, std::function<std::int64_t(int i, std::int64_t n)> eval);

    int ell() const { return ell_; }
    Kind kind() const { return kind_; }

    // q_i(n), i in [0, ell), n >= 1. Throws RangeTooSmall past a table's end.
    std::int64_t q(int i, std::int64_t n) const;

    // Largest index any map reaches at step n (q_ell(n) by the ordering).
    std::int64_t max_index(std::int64_t n) const { return q(ell_ - 1, n); }

    const std::vector<std::int64_t>& affine_slopes() const { return a_; }
    const std::vector<std::int64_t>& affine_offsets() const { return b_; }

private:
    IndexSchedule() = default;

    Kind kind_ = Kind::Affine;
    int ell_ = 0;
    std::vector<std::int64_t> a_, b_;
    std::vector<std::vector<std::int64_t>> table_;
    std::function<std::int64_t(int, std::int64_t)> eval_;
};

struct SeparationViolation {
    int i;            // pair index: q_{i+1}(n) < q_i(n + floor(sigma ln n))
    std::int64_t n;
};

// Result of checking q_{i+1}(n) >= q_i(n + floor(sigma ln n)) on [1, n_max].
// Either the least n0 from which the condition holds through n_max, or the
// violations when it fails at the top of the range.
struct SeparationResult {
    std::optional<std::int64_t> n0;
    std::vector<SeparationViolation> violations;

    bool holds_eventually() const { return n0.has_value(); }
};

SeparationResult check_separation(const IndexSchedule& s, double sigma, std::int64_t n_max,
                                  std::size_t max_violations = 64);

}  // namespace nonconv
