#include <stdexcept>

#include "aslab/harness.hpp"

namespace aslab {

void MetricTable::validate() const {
    auto n = labels.size();
    if (dist.size() != n) throw std::invalid_argument("MetricTable: table size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n) throw std::invalid_argument("MetricTable: table row size mismatch");
        if (!dist[i][i].is_zero()) throw std::invalid_argument("MetricTable: nonzero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (dist[i][j].sign() < 0) throw std::invalid_argument("MetricTable: negative distance");
            if (!(dist[i][j] == dist[j][i])) throw std::invalid_argument("MetricTable: not symmetric");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (dist[i][k] > dist[i][j] + dist[j][k])
                    throw std::invalid_argument("MetricTable: triangle inequality violated");
}

NetResult build_4delta_net(const MetricTable& table, const std::vector<std::size_t>& f,
                           const std::vector<std::size_t>& K, const Rational& delta) {
    table.validate();
    auto n = table.size();
    if (f.size() != n) throw std::invalid_argument("build_4delta_net: f must map every point");
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i] >= n) throw std::invalid_argument("build_4delta_net: f out of range");
        bool in_k = false;
        for (std::size_t k : K) in_k = in_k || k == f[i];
        if (!in_k) throw std::invalid_argument("build_4delta_net: f(G) must lie in K");
    }

    NetResult out;
    for (std::size_t i = 0; i < n; ++i) {
        if (table.dist[i][f[i]] <= delta) out.H.push_back(i);
    }
    if (out.H.empty()) return out;

    // greedy delta-net F of K
    std::vector<std::size_t> net_of_k;
    for (std::size_t k : K) {
        bool covered = false;
        for (std::size_t c : net_of_k) covered = covered || table.dist[k][c] <= delta;
        if (!covered) net_of_k.push_back(k);
    }

    // eta: H -> F picks a net point within delta of f(x); nu picks one
    // representative of each eta fiber. nu(eta(H)) is the 4delta-net.
    std::vector<std::optional<std::size_t>> rep(n);  // net point -> representative in H
    for (std::size_t x : out.H) {
        std::size_t eta = n;
        for (std::size_t c : net_of_k) {
            if (table.dist[f[x]][c] <= delta) {
                eta = c;
                break;
            }
        }
        if (eta == n) throw std::logic_error("build_4delta_net: net of K failed to cover f(x)");
        if (!rep[eta]) rep[eta] = x;
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (rep[c]) out.net.push_back(*rep[c]);
    }
    return out;
}

}  // namespace aslab
