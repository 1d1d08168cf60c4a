#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "nonconv/rng.hpp"

namespace nonconv {

// Start law for a finite-state Markov chain: a fixed state index or an
// explicit distribution over states.
using MarkovStart = std::variant<int, std::vector<double>>;

// The driving randomness xi: an i.i.d. sampler or a finite-state Markov
// chain. Descriptions are immutable; all sampling is routed through a
// CounterRng so realizations are pure functions of (seed, stream, index).
class ScalarProcess {
public:
    enum class Kind { Iid, Markov };
    enum class Sampler { Uniform, Choice, Normal, Constant };

    static ScalarProcess iid_uniform(double lo, double hi);
    static ScalarProcess iid_choice(std::vector<double> values);
    static ScalarProcess iid_normal(double mu, double sigma);
    static ScalarProcess iid_constant(double value);
    // Row-stochastic transition matrix over states carrying real values.
    static ScalarProcess markov(std::vector<double> state_values,
                                std::vector<std::vector<double>> transition, MarkovStart start);

    Kind kind() const { return kind_; }
    Sampler sampler() const { return sampler_; }
    bool is_markov() const { return kind_ == Kind::Markov; }

    // Finite-valued processes admit exact chi-squared comparisons.
    bool finite_valued() const;
    const std::vector<double>& values() const { return values_; }

    // xi_j for an i.i.d. process; directly addressable by index.
    double iid_value(const CounterRng& rng, std::uint64_t index) const;

    int num_states() const { return static_cast<int>(values_.size()); }
    double state_value(int s) const { return values_[static_cast<std::size_t>(s)]; }
    const std::vector<std::vector<double>>& transition() const { return transition_; }
    const MarkovStart& start() const { return start_; }

    int initial_state(const CounterRng& init_rng) const;
    int step_state(int state, double u) const;

private:
    ScalarProcess() = default;

    Kind kind_ = Kind::Iid;
    Sampler sampler_ = Sampler::Constant;
    double lo_ = 0.0, hi_ = 1.0;   // uniform
    double mu_ = 0.0, sd_ = 1.0;   // normal
    std::vector<double> values_;   // choice values or Markov state values
    std::vector<std::vector<double>> transition_;
    MarkovStart start_ = 0;
};

// One realization's values at the requested (strictly increasing) indices.
// Markov paths are generated sequentially from index 0 and sub-sampled;
// i.i.d. values are addressed directly. Deterministic given (seed, trial).
std::vector<double> sample_path(const ScalarProcess& p,
                                const std::vector<std::int64_t>& indices, std::uint64_t seed,
                                std::uint64_t trial = 0);

// Streaming view of one Markov realization: multiple cursors over the same
// (seed, stream) see the same path, so lagging and leading index maps can be
// served in O(ell) memory.
class MarkovCursor {
public:
    MarkovCursor(const ScalarProcess& p, CounterRng path_rng, CounterRng init_rng);

    // Value of xi_j; j must be >= the previous position (monotone access).
    double value_at(std::int64_t j);

    int state() const { return state_; }

private:
    const ScalarProcess* p_;
    CounterRng path_rng_;
    std::int64_t pos_;
    int state_;
};

}  // namespace nonconv
