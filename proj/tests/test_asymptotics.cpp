#include <doctest.h>

#include <cmath>
#include <numbers>

#include "supra/asymptotics.hpp"
#include "supra/errors.hpp"
#include "supra/supra_operator.hpp"
#include "support/oracles.hpp"

using namespace supra;

namespace {

Vector sine_profile(Index t_count) {
    Vector s(t_count);
    for (Index t = 0; t < t_count; ++t) {
        s[t] = std::sin(std::numbers::pi * static_cast<double>(t + 1) /
                        static_cast<double>(t_count + 1));
    }
    return s / s.lpNorm<1>();
}

} // namespace

TEST_CASE("weak limit: pagerank layers all attain the maximum") {
    const auto net = oracles::random_network(42, 4, 3);
    const auto set = build_layer_set(net, {CentralityFamily::PageRank, 0.85});
    const auto limit = weak_limit(set, undirected_chain(3));
    CHECK(limit.top_layers == std::vector<Index>{0, 1, 2});
    for (const auto &eig : limit.layer_eigs) {
        CHECK(std::abs(eig.value - 1.0) <= 1e-9);
    }
}

TEST_CASE("weak limit: X equals the coupling matrix for pagerank layers") {
    const auto net = oracles::random_network(7, 4, 3);
    const auto set = build_layer_set(net, {CentralityFamily::PageRank, 0.85});
    const auto chain = undirected_chain(3);
    const auto limit = weak_limit(set, chain);
    CHECK((limit.x - chain.matrix).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(limit.lambda1 - std::sqrt(2.0)) <= 1e-12); // Perron root of the 3-chain
}

TEST_CASE("weak limit: identical layers mix by the chain's sine profile") {
    const auto net = oracles::random_network(5, 3, 1);
    LayerCentralitySet set;
    set.kind.family = CentralityFamily::PageRank;
    set.node_count = 3;
    for (int t = 0; t < 4; ++t) {
        set.matrices.push_back(pagerank_matrix(net.layer(0), 0.85));
    }
    const auto limit = weak_limit(set, undirected_chain(4));
    CHECK(oracles::l1_diff(limit.alpha, sine_profile(4)) <= 1e-10);
}

TEST_CASE("weak limit: single layer") {
    const auto net = oracles::random_network(19, 4, 1);
    const auto set = build_layer_set(net, {CentralityFamily::PageRank, 0.85});
    const auto limit = weak_limit(set, undirected_chain(1));
    CHECK(limit.lambda1 == 0.0); // A~ = [[0]]
    const auto pr = oracles::dense_dominant(set.matrices[0].dense());
    CHECK(oracles::l1_diff(limit.limit_vector, pr.vector) <= 1e-11);
}

TEST_CASE("weak limit matches the full solve at omega = 1e-6") {
    const auto net = oracles::random_network(4242, 4, 3);
    const auto set = build_layer_set(net, {CentralityFamily::PageRank, 0.85});
    const auto chain = undirected_chain(3);
    const auto limit = weak_limit(set, chain);

    PowerOptions opts;
    opts.tol = 1e-10;
    opts.max_iter = 500'000;
    opts.start = limit.limit_vector; // settles the near-degenerate cluster mixture
    const auto pair = dominant_eigenpair(SupraOperator(set, chain, 1e-6), opts);
    CHECK(oracles::l1_diff(pair.vector, limit.limit_vector) <= 1e-4);

    // conditional node centralities decouple into per-layer eigenvectors
    const auto r = extract(pair.vector, pair.value, 4, 3);
    for (Index t = 0; t < 3; ++t) {
        const Vector z = r.cond_node.col(t);
        CHECK(oracles::l1_diff(z, limit.layer_eigs[static_cast<std::size_t>(t)].right) <= 1e-4);
    }
}

TEST_CASE("weak limit: reducible X restricted to the argmax layers is rejected") {
    // layers 0 and 2 attain the maximum (identical 2-cycles), layer 1 is
    // scaled down; the chain has no 0<->2 coupling, so X restricted to {0,2}
    // has no edges at all
    Matrix cyc = Matrix::Zero(2, 2);
    cyc(0, 1) = cyc(1, 0) = 1.0;
    LayerCentralitySet set;
    set.kind.family = CentralityFamily::Eigenvector;
    set.node_count = 2;
    set.matrices.emplace_back(oracles::sparse_from_dense(cyc));
    set.matrices.emplace_back(oracles::sparse_from_dense(Matrix(0.5 * cyc)));
    set.matrices.emplace_back(oracles::sparse_from_dense(cyc));
    CHECK_THROWS_AS(weak_limit(set, undirected_chain(3)), PreconditionError);
}

TEST_CASE("sweep: pagerank MLC equals the coupling Perron vector at every omega") {
    // column-stochastic layers collapse the block sums of the eigenvalue
    // equation onto (lambda - 1) x = omega A~ x, so x is A~'s Perron vector
    // exactly, for any omega
    const auto net = oracles::random_network(321, 4, 6);
    const auto chain = undirected_chain(6);
    const auto perron = oracles::dense_dominant(chain.matrix);
    PowerOptions opts;
    opts.tol = 1e-12;
    opts.max_iter = 2'000'000;
    const auto results =
        sweep(net, {CentralityFamily::PageRank, 0.85}, chain, {1.0, 10.0, 100.0}, opts);
    const double omegas[] = {1.0, 10.0, 100.0};
    for (std::size_t k = 0; k < results.size(); ++k) {
        CHECK(oracles::l1_diff(results[k].mlc, perron.vector) <= 1e-10);
        CHECK(std::abs(results[k].lambda_max - (1.0 + omegas[k] * perron.value)) <=
              1e-10 * (1.0 + omegas[k] * perron.value));
    }
}

TEST_CASE("sweep: eigenvector-kind MLC approaches the strong limit as omega grows") {
    const auto net = oracles::random_network(2718, 4, 5, 0.6);
    const LayerCentralityKind kind{CentralityFamily::Eigenvector};
    const auto set = build_layer_set(net, kind);
    const auto chain = undirected_chain(5);
    const auto limit = strong_limit(set, chain);
    const auto lr = extract(limit.limit_vector, limit.mu1, 4, 5);

    PowerOptions opts;
    opts.tol = 1e-11;
    opts.max_iter = 3'000'000;
    const auto results = sweep(net, kind, chain, {1.0, 10.0, 100.0, 1000.0}, opts);
    double prev = -1.0;
    for (std::size_t k = 0; k < results.size(); ++k) {
        const double dist = oracles::l1_diff(results[k].mlc, lr.mlc);
        if (prev >= 0.0) {
            CHECK(dist <= prev / 5.0); // O(1/omega) decay per decade
        }
        prev = dist;
    }
    CHECK(prev <= 1e-3);
}

TEST_CASE("weak limit: argmax subset zeroes the other layers' blocks") {
    // layers 0 and 1 tie for the maximum, layer 2 is scaled down; the chain
    // couples 0<->1, so X restricted to the argmax set stays irreducible
    Matrix cyc = Matrix::Zero(2, 2);
    cyc(0, 1) = cyc(1, 0) = 1.0;
    LayerCentralitySet set;
    set.kind.family = CentralityFamily::Eigenvector;
    set.node_count = 2;
    set.matrices.emplace_back(oracles::sparse_from_dense(cyc));
    set.matrices.emplace_back(oracles::sparse_from_dense(cyc));
    set.matrices.emplace_back(oracles::sparse_from_dense(Matrix(0.5 * cyc)));
    const auto limit = weak_limit(set, undirected_chain(3));
    CHECK(limit.top_layers == std::vector<Index>{0, 1});
    CHECK(limit.alpha[2] == 0.0);
    CHECK(limit.limit_vector.segment(4, 2).cwiseAbs().maxCoeff() == 0.0);

    // extract() insists on positivity, extract_limit() tolerates the zeros
    CHECK_THROWS_AS(extract(limit.limit_vector, limit.lambda1, 2, 3), std::domain_error);
    const auto r = extract_limit(limit.limit_vector, limit.lambda1, 2, 3);
    CHECK(r.mlc[2] == 0.0);
    CHECK(r.cond_node.col(2).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(r.joint.sum() - 1.0) <= 1e-14);
    for (Index t = 0; t < 2; ++t) {
        CHECK(std::abs(r.cond_node.col(t).sum() - 1.0) <= 1e-12);
    }
}

TEST_CASE("weak limit: degenerate layer eigenvalue is rejected") {
    // two disjoint 2-cycles: Perron root 1 with multiplicity 2
    Matrix two_cycles = Matrix::Zero(4, 4);
    two_cycles(0, 1) = two_cycles(1, 0) = 1.0;
    two_cycles(2, 3) = two_cycles(3, 2) = 1.0;
    LayerCentralitySet set;
    set.kind.family = CentralityFamily::Eigenvector;
    set.node_count = 4;
    set.matrices.emplace_back(oracles::sparse_from_dense(two_cycles));
    set.matrices.emplace_back(oracles::sparse_from_dense(two_cycles));
    CHECK_THROWS_AS(weak_limit(set, undirected_chain(2)), PreconditionError);
}

TEST_CASE("strong limit: identical layers aggregate to the layer matrix itself") {
    const auto net = oracles::random_network(6, 4, 1);
    LayerCentralitySet set;
    set.kind.family = CentralityFamily::PageRank;
    set.node_count = 4;
    for (int t = 0; t < 5; ++t) {
        set.matrices.push_back(pagerank_matrix(net.layer(0), 0.85));
    }
    const auto limit = strong_limit(set, undirected_chain(5));
    CHECK((limit.aggregated - set.matrices[0].dense()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("strong limit: undirected chain gives the sin^2-weighted average") {
    const auto net = oracles::random_network(88, 4, 5);
    const auto set = build_layer_set(net, {CentralityFamily::PageRank, 0.85});
    const auto limit = strong_limit(set, undirected_chain(5));

    const Vector w = sin_squared_weights(5);
    Matrix want = Matrix::Zero(4, 4);
    for (Index t = 0; t < 5; ++t) {
        want += w[t] * set.matrices[static_cast<std::size_t>(t)].dense();
    }
    CHECK((limit.aggregated - want).cwiseAbs().maxCoeff() <= 1e-12);

    // the chain is symmetric, so left and right eigenvectors coincide
    CHECK(oracles::l1_diff(limit.left, limit.right) <= 1e-11);
    CHECK(std::abs(limit.mu1 - 2.0 * std::cos(std::numbers::pi / 6.0)) <= 1e-12);
}

TEST_CASE("strong limit: separability, MLC follows the coupling eigenvector") {
    const auto net = oracles::random_network(909, 5, 6);
    const auto set = build_layer_set(net, {CentralityFamily::PageRank, 0.85});
    const auto chain = undirected_chain(6);
    const auto limit = strong_limit(set, chain);
    const auto r = extract(limit.limit_vector, limit.mu1, 5, 6);

    // x_t = v~_t / sum(v~) exactly in the limit object; for the undirected
    // chain that's a plain sine arc (the sin^2 terms are the aggregation
    // weights in X~, not the layer profile)
    CHECK(oracles::l1_diff(r.mlc, limit.right / limit.right.lpNorm<1>()) <= 1e-12);
    CHECK(oracles::l1_diff(r.mlc, sine_profile(6)) <= 1e-10);
    CHECK(oracles::l1_diff(r.mnc, limit.alpha / limit.alpha.lpNorm<1>()) <= 1e-12);
}

TEST_CASE("strong limit matches the full solve at omega = 1e6") {
    const auto net = oracles::random_network(31, 4, 3);
    const auto set = build_layer_set(net, {CentralityFamily::PageRank, 0.85});
    const auto chain = undirected_chain(3);
    const auto limit = strong_limit(set, chain);

    PowerOptions opts;
    opts.tol = 1e-11;
    opts.max_iter = 500'000;
    opts.start = limit.limit_vector;
    const auto pair = dominant_eigenpair(SupraOperator(set, chain, 1e6), opts);
    CHECK(oracles::l1_diff(pair.vector, limit.limit_vector) <= 1e-3);
    CHECK(std::abs(pair.value / 1e6 - limit.mu1) <= 1e-5);
}

TEST_CASE("strong limit: aggregated eigenvalue warning flag for pagerank layers") {
    const auto net = oracles::random_network(14, 3, 4);
    const auto set = build_layer_set(net, {CentralityFamily::PageRank, 0.85});
    const auto limit = strong_limit(set, undirected_chain(4));
    // X~ is column-stochastic (eigenvalue 1) while mu~1 of the 4-chain is golden-ratio-ish
    CHECK(std::abs(limit.aggregated_eigenvalue - 1.0) <= 1e-9);
    CHECK_FALSE(limit.eigenvalue_matches_mu1);
}

TEST_CASE("strong limit: directed chains order the layer profile in time") {
    const auto net = oracles::random_network(77, 4, 10);
    const auto set = build_layer_set(net, {CentralityFamily::PageRank, 0.85});

    const auto forward = strong_limit(set, directed_chain_teleport(10, 0.001));
    const auto fr = extract(forward.limit_vector, forward.mu1, 4, 10);
    for (Index t = 0; t + 1 < 10; ++t) {
        CHECK(fr.mlc[t] > fr.mlc[t + 1]);
    }

    const auto backward = strong_limit(set, reverse(directed_chain_teleport(10, 0.001)));
    const auto br = extract(backward.limit_vector, backward.mu1, 4, 10);
    for (Index t = 0; t + 1 < 10; ++t) {
        CHECK(br.mlc[t] < br.mlc[t + 1]);
    }
}

TEST_CASE("stride permutation: worked example and degenerate shapes") {
    CHECK(stride_permutation(2, 2) == std::vector<Index>{0, 2, 1, 3});

    const auto id_n1 = stride_permutation(1, 5);
    const auto id_t1 = stride_permutation(5, 1);
    for (Index k = 0; k < 5; ++k) {
        CHECK(id_n1[static_cast<std::size_t>(k)] == k);
        CHECK(id_t1[static_cast<std::size_t>(k)] == k);
    }
}

TEST_CASE("stride permutation: bijection and block bookkeeping") {
    for (Index n : {2, 3, 7}) {
        for (Index t_count : {2, 4, 5}) {
            const auto p = stride_permutation(n, t_count);
            std::vector<char> seen(static_cast<std::size_t>(n * t_count), 0);
            for (Index l : p) {
                REQUIRE(l >= 0);
                REQUIRE(l < n * t_count);
                seen[static_cast<std::size_t>(l)] = 1;
            }
            for (char s : seen) {
                CHECK(s == 1);
            }

            // e^(j) kron v~ lands on W(i,t) = [i==j] v~_t
            const Vector vt = sine_profile(t_count);
            const Index j = n / 2;
            Vector node_major = Vector::Zero(n * t_count);
            node_major.segment(j * t_count, t_count) = vt;
            Vector layer_major(n * t_count);
            for (Index k = 0; k < n * t_count; ++k) {
                layer_major[k] = node_major[p[static_cast<std::size_t>(k)]];
            }
            for (Index t = 0; t < t_count; ++t) {
                for (Index i = 0; i < n; ++i) {
                    CHECK(layer_major[n * t + i] == (i == j ? vt[t] : 0.0));
                }
            }
        }
    }
}

TEST_CASE("sin squared weights") {
    const Vector w3 = sin_squared_weights(3);
    CHECK(w3[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(w3[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w3[2] == doctest::Approx(0.25).epsilon(1e-14));

    const Vector w1 = sin_squared_weights(1);
    CHECK(w1[0] == 1.0);

    for (Index t_count : {2, 5, 12}) {
        const Vector w = sin_squared_weights(t_count);
        CHECK(std::abs(w.sum() - 1.0) <= 1e-12);
        for (Index t = 0; t < t_count; ++t) {
            CHECK(std::abs(w[t] - w[t_count - 1 - t]) <= 1e-12); // sin(pi - x) = sin(x)
        }
    }
}
