#include "ytg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>

#include "ytg/errors.hpp"
#include "ytg/rational.hpp"

namespace ytg {

std::int64_t Configuration::total() const {
    return std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
}

Configuration operator+(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) {
        throw InvalidInput("configuration length mismatch");
    }
    Configuration out = a;
    for (std::size_t k = 0; k < out.weights.size(); ++k) {
        out.weights[k] += b.weights[k];
    }
    return out;
}

Configuration operator-(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) {
        throw InvalidInput("configuration length mismatch");
    }
    Configuration out = a;
    for (std::size_t k = 0; k < out.weights.size(); ++k) {
        out.weights[k] -= b.weights[k];
    }
    return out;
}

Graph Graph::from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
    if (n < 1) {
        throw InvalidInput("graph needs at least one vertex");
    }
    Graph g;
    g.n_ = n;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n) {
            throw InvalidInput("edge endpoint out of range");
        }
        if (a == b) {
            throw InvalidInput("self-loop at vertex " + std::to_string(a));
        }
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) {
            throw InvalidInput("repeated edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
        }
        g.edges_.push_back(key);
        g.adjacency_[static_cast<std::size_t>(a - 1)].push_back(b);
        g.adjacency_[static_cast<std::size_t>(b - 1)].push_back(a);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
    }

    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::queue<Vertex> frontier;
    frontier.push(1);
    reached[0] = true;
    int count = 1;
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : g.adjacency_[static_cast<std::size_t>(v - 1)]) {
            if (!reached[static_cast<std::size_t>(w - 1)]) {
                reached[static_cast<std::size_t>(w - 1)] = true;
                ++count;
                frontier.push(w);
            }
        }
    }
    if (count != n) {
        throw InvalidInput("graph is not connected");
    }
    return g;
}

Graph Graph::path(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 1; i < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return from_edges(n, std::move(edges));
}

Graph Graph::complete(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return from_edges(n, std::move(edges));
}

Graph Graph::cycle(int n) {
    if (n < 3) {
        throw InvalidInput("cycle needs at least 3 vertices");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 1; i < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(1, n);
    return from_edges(n, std::move(edges));
}

Graph Graph::from_family(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw InvalidInput("graph family must look like 'path:5'");
    }
    std::string_view family = spec.substr(0, colon);
    std::string_view count = spec.substr(colon + 1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
    if (ec != std::errc{} || ptr != count.data() + count.size()) {
        throw InvalidInput("bad vertex count in '" + std::string(spec) + "'");
    }
    if (family == "path") {
        return path(n);
    }
    if (family == "complete") {
        return complete(n);
    }
    if (family == "cycle") {
        return cycle(n);
    }
    throw InvalidInput("unknown graph family '" + std::string(family) + "'");
}

const std::vector<Vertex>& Graph::neighbors(Vertex i) const {
    if (i < 1 || i > n_) {
        throw InvalidInput("vertex index " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
    }
    return adjacency_[static_cast<std::size_t>(i - 1)];
}

Configuration toppling_offset(const Graph& g, Vertex i) {
    const auto& adj = g.neighbors(i);
    Configuration delta = Configuration::zeros(g.n());
    for (Vertex j : adj) {
        delta.weights[static_cast<std::size_t>(j - 1)] += 1;
    }
    delta.weights[static_cast<std::size_t>(i - 1)] -= static_cast<std::int64_t>(adj.size());
    return delta;
}

namespace {

void require_length(const Graph& g, const Configuration& c) {
    if (c.size() != g.n()) {
        throw InvalidInput("configuration has " + std::to_string(c.size()) + " entries, graph has " +
                           std::to_string(g.n()) + " vertices");
    }
}

void fire(const Graph& g, Configuration& c, Vertex i, std::int64_t times) {
    const auto& adj = g.neighbors(i);
    for (Vertex j : adj) {
        c.weights[static_cast<std::size_t>(j - 1)] += times;
    }
    c.weights[static_cast<std::size_t>(i - 1)] -= times * static_cast<std::int64_t>(adj.size());
}

}  // namespace

Configuration apply_word(const Graph& g, const Configuration& c, std::span<const Vertex> word) {
    require_length(g, c);
    Configuration out = c;
    for (Vertex i : word) {
        fire(g, out, i, 1);
    }
    return out;
}

Configuration apply_exponents(const Graph& g, const Configuration& c, std::span<const std::int64_t> a) {
    require_length(g, c);
    if (static_cast<int>(a.size()) != g.n()) {
        throw InvalidInput("exponent vector length does not match graph");
    }
    Configuration out = c;
    for (Vertex i = 1; i <= g.n(); ++i) {
        if (a[static_cast<std::size_t>(i - 1)] != 0) {
            fire(g, out, i, a[static_cast<std::size_t>(i - 1)]);
        }
    }
    return out;
}

LaplacianSolution reduced_laplacian_solve(const Graph& g, const Configuration& target) {
    require_length(g, target);
    LaplacianSolution sol;
    if (target.total() != 0) {
        sol.status = LaplacianStatus::NonZeroSum;
        return sol;
    }
    const int m = g.n() - 1;
    // Augmented system [M | b] with M[r][c] = Delta_{c+1}[r+1], rows/cols 1..n-1.
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m), std::vector<BigInt>(static_cast<std::size_t>(m + 1)));
    for (int c = 0; c < m; ++c) {
        Configuration delta = toppling_offset(g, c + 1);
        for (int r = 0; r < m; ++r) {
            a[r][c] = static_cast<long>(delta.weights[static_cast<std::size_t>(r)]);
        }
    }
    for (int r = 0; r < m; ++r) {
        a[r][m] = static_cast<long>(target.weights[static_cast<std::size_t>(r)]);
    }

    // Bareiss fraction-free elimination to upper-triangular form.
    BigInt prev = 1;
    for (int k = 0; k < m; ++k) {
        int pivot = k;
        while (pivot < m && a[pivot][k] == 0) {
            ++pivot;
        }
        if (pivot == m) {
            throw std::logic_error("reduced Laplacian is singular on a connected graph");
        }
        std::swap(a[k], a[pivot]);
        for (int r = k + 1; r < m; ++r) {
            for (int c = k + 1; c <= m; ++c) {
                a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
            }
            a[r][k] = 0;
        }
        prev = a[k][k];
    }

    std::vector<BigRational> x(static_cast<std::size_t>(m));
    for (int r = m - 1; r >= 0; --r) {
        BigRational s = BigRational(a[r][m]);
        for (int c = r + 1; c < m; ++c) {
            s -= BigRational(a[r][c]) * x[c];
        }
        x[r] = make_rational(s.get_num(), s.get_den() * a[r][r]);
    }

    sol.lambda.assign(static_cast<std::size_t>(g.n()), 0);
    for (int k = 0; k < m; ++k) {
        if (x[k].get_den() != 1 || !x[k].get_num().fits_slong_p()) {
            sol.status = LaplacianStatus::NonIntegral;
            sol.lambda.clear();
            return sol;
        }
        sol.lambda[static_cast<std::size_t>(k)] = x[k].get_num().get_si();
    }
    if (apply_exponents(g, Configuration::zeros(g.n()), sol.lambda) != target) {
        throw std::logic_error("Laplacian solution failed verification");
    }
    return sol;
}

}  // namespace ytg
