#include "nonconv/schedule.hpp"

#include <cmath>
#include <stdexcept>

#include "nonconv/errors.hpp"

namespace nonconv {

IndexSchedule IndexSchedule::affine(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
    if (a.empty() || a.size() != b.size())
        throw std::invalid_argument("affine schedule: need equal, nonempty slope/offset lists");
    const int ell = static_cast<int>(a.size());
    for (int i = 0; i < ell; ++i) {
        if (a[i] < 1) throw std::invalid_argument("affine schedule: slope a_i must be >= 1");
        if (b[i] < 0) throw std::invalid_argument("affine schedule: offset b_i must be >= 0");
    }
    // Strict ordering for every n >= 1 reduces to: slopes nondecreasing and
    // values at n = 1 strictly increasing.
    for (int i = 0; i + 1 < ell; ++i) {
        if (a[i + 1] < a[i] || a[i + 1] + b[i + 1] <= a[i] + b[i])
            throw std::invalid_argument("affine schedule: maps not strictly ordered");
    }
    IndexSchedule s;
    s.kind_ = Kind::Affine;
    s.ell_ = ell;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    return s;
}

IndexSchedule IndexSchedule::table(std::vector<std::vector<std::int64_t>> values) {
    if (values.empty()) throw std::invalid_argument("table schedule: empty");
    const int ell = static_cast<int>(values.size());
    const std::size_t len = values[0].size();
    if (len == 0) throw std::invalid_argument("table schedule: empty rows");
    for (const auto& row : values)
        if (row.size() != len) throw std::invalid_argument("table schedule: ragged rows");
    if (values[0][0] < 1) throw std::invalid_argument("table schedule: q_1(1) must be >= 1");
    for (int i = 0; i < ell; ++i)
        for (std::size_t n = 1; n < len; ++n)
            if (values[i][n] <= values[i][n - 1])
                throw std::invalid_argument("table schedule: q_i not strictly increasing");
    for (int i = 0; i + 1 < ell; ++i)
        for (std::size_t n = 0; n < len; ++n)
            if (values[i + 1][n] <= values[i][n])
                throw std::invalid_argument("table schedule: maps not strictly ordered");
    IndexSchedule s;
    s.kind_ = Kind::Table;
    s.ell_ = ell;
    s.table_ = std::move(values);
    return s;
}

IndexSchedule IndexSchedule::custom(int ell,
                                    std::function<std::int64_t(int, std::int64_t)> eval) {
    if (ell < 1 || !eval) throw std::invalid_argument("custom schedule: bad arguments");
    IndexSchedule s;
    s.kind_ = Kind::Custom;
    s.ell_ = ell;
    s.eval_ = std::move(eval);
    return s;
}

std::int64_t IndexSchedule::q(int i, std::int64_t n) const {
    if (i < 0 || i >= ell_ || n < 1) throw std::out_of_range("IndexSchedule::q");
    switch (kind_) {
        case Kind::Affine:
            return a_[i] * n + b_[i];
        case Kind::Table:
            if (static_cast<std::size_t>(n) > table_[i].size())
                throw RangeTooSmall("table schedule: index past table end");
            return table_[i][static_cast<std::size_t>(n - 1)];
        case Kind::Custom:
            return eval_(i, n);
    }
    return 0;
}

SeparationResult check_separation(const IndexSchedule& s, double sigma, std::int64_t n_max,
                                  std::size_t max_violations) {
    if (sigma <= 0.0) throw std::invalid_argument("check_separation: sigma must be > 0");
    if (n_max < 1) throw std::invalid_argument("check_separation: n_max must be >= 1");

    const int ell = s.ell();
    SeparationResult res;
    if (ell == 1) {  // no pairs to compare
        res.n0 = 1;
        return res;
    }

    // Probe the far end first so a too-short table fails loudly, not midway.
    const std::int64_t reach = n_max + static_cast<std::int64_t>(std::floor(sigma * std::log(
                                            static_cast<double>(n_max))));
    (void)s.q(0, reach);

    std::int64_t last_violation = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const std::int64_t lag =
            static_cast<std::int64_t>(std::floor(sigma * std::log(static_cast<double>(n))));
        for (int i = 0; i + 1 < ell; ++i) {
            if (s.q(i + 1, n) < s.q(i, n + lag)) {
                last_violation = n;
                if (res.violations.size() < max_violations)
                    res.violations.push_back({i, n});
            }
        }
    }
    if (last_violation == 0) {
        res.n0 = 1;
        res.violations.clear();
    } else if (last_violation < n_max) {
        res.n0 = last_violation + 1;
    }
    return res;
}

}  // namespace nonconv
