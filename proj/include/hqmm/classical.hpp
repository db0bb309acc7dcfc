// classical.hpp — Classical hidden Markov models and the exact Viterbi
// dynamic program. Indexing is 0-based with horizon n, so a run of length
// n+1 consumes outcomes k_0..k_n.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqmm {

struct ClassicalHmm {
    std::size_t n_states{0};
    std::size_t n_outcomes{0};
    std::vector<double> initial;                    // p^(0), length N
    std::vector<std::vector<double>> transition;    // P_H, N x N row-stochastic
    std::vector<std::vector<double>> emission;      // p_{O|H}, N x M rows are distributions

    void validate() const {
        constexpr double tol = 1e-12;
        if (n_states == 0 || n_outcomes == 0) throw std::invalid_argument("ClassicalHmm: empty model");
        auto check_row = [&](const std::vector<double>& row, std::size_t len, const std::string& what) {
            if (row.size() != len) throw std::invalid_argument("ClassicalHmm: " + what + " has wrong length");
            double s = 0.0;
            for (double x : row) {
                if (x < 0.0) throw std::invalid_argument("ClassicalHmm: negative entry in " + what);
                s += x;
            }
            if (std::abs(s - 1.0) > tol) {
                throw std::invalid_argument("ClassicalHmm: " + what + " sums to " + std::to_string(s) +
                                            ", expected 1");
            }
        };
        check_row(initial, n_states, "initial distribution");
        if (transition.size() != n_states || emission.size() != n_states) {
            throw std::invalid_argument("ClassicalHmm: row count mismatch");
        }
        for (std::size_t i = 0; i < n_states; ++i) {
            check_row(transition[i], n_states, "transition row " + std::to_string(i));
            check_row(emission[i], n_outcomes, "emission row " + std::to_string(i));
        }
    }
};

struct ClassicalViterbiResult {
    std::vector<std::size_t> path;              // i_0..i_n
    double score{0.0};                          // max_i p0_i * v_0(i)
    std::vector<std::vector<double>> value_table;  // v[m][i]
};

// Backward value recursion
//   v_n(i) = p(k_n | i),
//   v_m(i) = p(k_m | i) * max_j P(i, j) v_{m+1}(j),
// score = max_i p0_i v_0(i), ties broken toward the lowest index.
inline ClassicalViterbiResult classical_viterbi(const ClassicalHmm& c, const std::vector<std::size_t>& outcomes) {
    c.validate();
    if (outcomes.empty()) throw std::invalid_argument("classical_viterbi: empty outcome sequence");
    for (std::size_t k : outcomes) {
        if (k >= c.n_outcomes) {
            throw std::invalid_argument("classical_viterbi: outcome index " + std::to_string(k) +
                                        " out of range");
        }
    }
    const std::size_t n = outcomes.size() - 1;
    const std::size_t N = c.n_states;

    std::vector<std::vector<double>> v(n + 1, std::vector<double>(N, 0.0));
    std::vector<std::vector<std::size_t>> back(n + 1, std::vector<std::size_t>(N, 0));

    for (std::size_t i = 0; i < N; ++i) v[n][i] = c.emission[i][outcomes[n]];
    for (std::size_t m = n; m-- > 0;) {
        for (std::size_t i = 0; i < N; ++i) {
            double best = -1.0;
            std::size_t best_j = 0;
            for (std::size_t j = 0; j < N; ++j) {
                const double cand = c.transition[i][j] * v[m + 1][j];
                if (cand > best) {
                    best = cand;
                    best_j = j;
                }
            }
            v[m][i] = c.emission[i][outcomes[m]] * best;
            back[m][i] = best_j;
        }
    }

    double score = -1.0;
    std::size_t first = 0;
    for (std::size_t i = 0; i < N; ++i) {
        const double cand = c.initial[i] * v[0][i];
        if (cand > score) {
            score = cand;
            first = i;
        }
    }

    ClassicalViterbiResult res;
    res.score = score;
    res.value_table = std::move(v);
    res.path.resize(n + 1);
    res.path[0] = first;
    for (std::size_t m = 0; m < n; ++m) res.path[m + 1] = back[m][res.path[m]];
    return res;
}

}  // namespace hqmm
