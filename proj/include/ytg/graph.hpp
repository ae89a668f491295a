#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ytg {

// Vertices are 1-based in every public interface.
using Vertex = int;

// Integer weights on the vertices of a graph.
struct Configuration {
    std::vector<std::int64_t> weights;

    Configuration() = default;
    explicit Configuration(std::vector<std::int64_t> w) : weights(std::move(w)) {}
    static Configuration zeros(int n) { return Configuration(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

    int size() const { return static_cast<int>(weights.size()); }
    std::int64_t total() const;
    std::int64_t operator[](Vertex i) const { return weights[static_cast<std::size_t>(i - 1)]; }

    friend Configuration operator+(const Configuration& a, const Configuration& b);
    friend Configuration operator-(const Configuration& a, const Configuration& b);
    friend auto operator<=>(const Configuration&, const Configuration&) = default;
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Connected simple undirected graph on vertices 1..n.
class Graph {
public:
    // Throws InvalidInput on self-loops, repeated edges, out-of-range endpoints,
    // or a disconnected result.
    static Graph from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges);
    static Graph path(int n);
    static Graph complete(int n);
    static Graph cycle(int n);
    // "path:5", "complete:5", "cycle:6".
    static Graph from_family(std::string_view spec);

    int n() const { return n_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex i) const;
    int degree(Vertex i) const { return static_cast<int>(neighbors(i).size()); }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// Delta_i: +1 on each neighbour of i, -deg(i) on i.
Configuration toppling_offset(const Graph& g, Vertex i);

// Fires the letters of `word` left to right.
Configuration apply_word(const Graph& g, const Configuration& c, std::span<const Vertex> word);

// T^a(c) = c + sum_i a_i * Delta_i.
Configuration apply_exponents(const Graph& g, const Configuration& c, std::span<const std::int64_t> a);

enum class LaplacianStatus { Ok, NonZeroSum, NonIntegral };

struct LaplacianSolution {
    LaplacianStatus status = LaplacianStatus::Ok;
    std::vector<std::int64_t> lambda;  // set when status == Ok; lambda[n-1] == 0

    explicit operator bool() const { return status == LaplacianStatus::Ok; }
};

// Solves sum_i lambda_i * Delta_i = target with lambda_n pinned to 0. The reduced
// Laplacian of a connected graph is nonsingular, so the rational solution is
// unique; it is returned only when integral.
LaplacianSolution reduced_laplacian_solve(const Graph& g, const Configuration& target);

}  // namespace ytg
