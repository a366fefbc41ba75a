#include <doctest.h>

#include <cmath>
#include <numbers>

#include "graphrefute/edge_list.hpp"
#include "graphrefute/spectral.hpp"
#include "support.hpp"

using namespace graphrefute;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<std::vector<long>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<long>> rows(m.size(), std::vector<long>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            rows[i][j] = m(i, j);
        }
    }
    return rows;
}

// prod_i (lambda_i - x), expanded in ascending powers of x.
std::vector<double> expand_from_roots(const std::vector<double>& roots) {
    std::vector<double> p{1.0};
    for (double r : roots) {
        std::vector<double> next(p.size() + 1, 0.0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k] += r * p[k];
            next[k + 1] -= p[k];
        }
        p = std::move(next);
    }
    return p;
}

}  // namespace

TEST_CASE("spectra of small graphs") {
    const Spectrum p3 = symmetric_spectrum(adjacency_matrix(testing::path_graph(3)), MatrixKind::adjacency);
    REQUIRE(p3.size() == 3);
    CHECK(p3.at(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(p3.at(2)) < 1e-12);
    CHECK(p3.at(3) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));

    const Spectrum k4 = symmetric_spectrum(adjacency_matrix(testing::complete_graph(4)));
    CHECK(k4.at(1) == doctest::Approx(3.0));
    for (std::size_t r = 2; r <= 4; ++r) {
        CHECK(k4.at(r) == doctest::Approx(-1.0));
    }

    // Cycle C_n: 2 cos(2 pi k / n).
    const std::size_t n = 9;
    const Spectrum c = symmetric_spectrum(adjacency_matrix(testing::cycle_graph(n)));
    std::vector<double> expect;
    for (std::size_t k = 0; k < n; ++k) {
        expect.push_back(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
    }
    std::sort(expect.rbegin(), expect.rend());
    for (std::size_t r = 0; r < n; ++r) {
        CHECK(c.values[r] == doctest::Approx(expect[r]).epsilon(1e-12));
    }
}

TEST_CASE("spectrum input checks") {
    CHECK_THROWS_AS(symmetric_spectrum(IntMatrix()), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_spectrum(from_rows({{0, 1}, {0, 0}})), std::invalid_argument);
    CHECK(symmetric_spectrum(from_rows({{5}})).at(1) == 5.0);
}

TEST_CASE("spectrum trace and order invariants") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 2 + rng() % 30;
        const Graph g = testing::random_connected(n, 0.15, rng);
        for (const IntMatrix& m : {adjacency_matrix(g), distance_matrix(g)}) {
            const Spectrum s = symmetric_spectrum(m);
            REQUIRE(s.size() == n);
            double sum = 0.0;
            double sq = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                sum += s.values[i];
                sq += s.values[i] * s.values[i];
                if (i > 0) {
                    CHECK(s.values[i - 1] >= s.values[i]);
                }
            }
            double fro = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    fro += static_cast<double>(m(i, j) * m(i, j));
                }
            }
            CHECK(std::abs(sum - static_cast<double>(m.trace())) < 1e-9 * (1.0 + fro));
            CHECK(sq == doctest::Approx(fro).epsilon(1e-10));
        }
    }
}

TEST_CASE("characteristic polynomial examples") {
    // det(A - xI) for P3 is -x^3 + 2x.
    const CharPoly p = char_poly(adjacency_matrix(testing::path_graph(3)));
    REQUIRE(p.degree() == 3);
    CHECK(p.coeffs[0] == 0);
    CHECK(p.coeffs[1] == 2);
    CHECK(p.coeffs[2] == 0);
    CHECK(p.coeffs[3] == -1);

    // Distance matrix of P3: -x^3 + 6x + 4.
    const CharPoly d = char_poly(distance_matrix(testing::path_graph(3)));
    CHECK(d.coeffs[0] == 4);
    CHECK(d.coeffs[1] == 6);
    CHECK(d.coeffs[3] == -1);
    CHECK(char_poly_modular(distance_matrix(testing::path_graph(3))) == d);
}

TEST_CASE("characteristic polynomial matches cofactor expansion for n <= 7") {
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 120; ++rep) {
        const std::size_t n = 1 + rep % 7;
        IntMatrix m(n);
        if (rep % 3 == 2) {
            // Arbitrary symmetric integer matrices, negative entries included.
            std::uniform_int_distribution<int> entry(-9, 9);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i; j < n; ++j) {
                    m(i, j) = m(j, i) = entry(rng);
                }
            }
        } else {
            const Graph g = testing::random_connected(n, 0.3, rng);
            m = rep % 3 ? distance_matrix(g) : adjacency_matrix(g);
        }
        const testing::Poly expect = testing::cofactor_char_poly(to_rows(m));
        const CharPoly fl = char_poly(m);
        const CharPoly mod = char_poly_modular(m);
        REQUIRE(fl.degree() == n);
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(fl.coeffs[k] == expect[k]);
        }
        CHECK(mod == fl);
    }
}

TEST_CASE("both polynomial routes agree on larger trees") {
    std::mt19937_64 rng(8);
    for (std::size_t n : {12, 25, 40}) {
        const Graph t = testing::random_tree(n, rng);
        const IntMatrix d = distance_matrix(t);
        CHECK(char_poly_modular(d) == char_poly(d));
        const IntMatrix a = adjacency_matrix(t);
        CHECK(char_poly_modular(a) == char_poly(a));
    }
}

TEST_CASE("polynomial coefficients match the expansion of the computed spectrum") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 40; ++rep) {
        const Graph g = testing::random_connected(3 + rng() % 10, 0.25, rng);
        const IntMatrix m = rep % 2 ? distance_matrix(g) : adjacency_matrix(g);
        const CharPoly p = char_poly(m);
        const std::vector<double> approx = expand_from_roots(symmetric_spectrum(m).values);
        double scale = 1.0;
        for (const auto& c : p.coeffs) {
            scale = std::max(scale, std::abs(c.convert_to<double>()));
        }
        for (std::size_t k = 0; k < approx.size(); ++k) {
            CHECK(std::abs(approx[k] - p.coeffs[k].convert_to<double>()) < 1e-8 * scale);
        }
    }
}

TEST_CASE("interpolated spectrum") {
    Spectrum s;
    s.values = {10.0, 4.0, 1.0};
    CHECK(interpolated_eigenvalue(s, 3) == 10.0);
    CHECK(interpolated_eigenvalue(s, 6) == 4.0);
    CHECK(interpolated_eigenvalue(s, 9) == 1.0);
    CHECK(interpolated_eigenvalue(s, 4) == doctest::Approx(8.0));
    CHECK(interpolated_eigenvalue(s, 5) == doctest::Approx(6.0));
    CHECK(interpolated_eigenvalue(s, 7) == doctest::Approx(3.0));
    // Ranks below 1 clamp to the top eigenvalue.
    CHECK(interpolated_eigenvalue(s, 1) == 10.0);
    CHECK(interpolated_eigenvalue(s, 2) == 10.0);
    CHECK_THROWS_AS(interpolated_eigenvalue(s, 0), std::out_of_range);
    CHECK_THROWS_AS(interpolated_eigenvalue(s, 10), std::out_of_range);

    const auto all = interpolate_spectrum(s);
    REQUIRE(all.size() == 9);
    for (std::size_t j = 1; j <= 9; ++j) {
        CHECK(all[j - 1] == interpolated_eigenvalue(s, j));
        if (j > 1) {
            CHECK(all[j - 2] >= all[j - 1]);
        }
    }
}

TEST_CASE("eigenvalue certificates") {
    const Graph graph7 = read_edge_list_file(testing::fixture_path("graph7.txt"));
    const EigenCertificate c = certify_eigenvalue(adjacency_matrix(graph7), 2);
    CHECK(c.value == doctest::Approx(1.786).epsilon(1e-3));
    CHECK(c.residual < 1e-9);
    CHECK(c.bound < 1e-9);
    CHECK(c.bound > 0.0);

    const Graph broom203 = read_edge_list_file(testing::fixture_path("broom203.txt"));
    const EigenCertificate d = certify_eigenvalue(distance_matrix(broom203), 8);
    CHECK(d.residual < 1e-8);
    CHECK(d.bound < 1e-6);

    CHECK_THROWS_AS(certify_eigenvalue(adjacency_matrix(graph7), 0), std::out_of_range);
    CHECK_THROWS_AS(certify_eigenvalue(adjacency_matrix(graph7), 8), std::out_of_range);
}

TEST_CASE("certified bounds enclose the closed-form spectrum of paths") {
    // P_n adjacency eigenvalues: 2 cos(pi k / (n + 1)), k = 1..n.
    for (std::size_t n : {5, 17, 60}) {
        const auto certs = certify_spectrum(adjacency_matrix(testing::path_graph(n)));
        REQUIRE(certs.size() == n);
        for (std::size_t k = 1; k <= n; ++k) {
            const double exact =
                2.0 * std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1));
            CHECK(certs[k - 1].rank == k);
            CHECK(std::abs(certs[k - 1].value - exact) <= certs[k - 1].bound + 1e-15);
        }
    }
}
