#include "graphrefute/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphrefute {

namespace {

Eigen::MatrixXd to_eigen(const IntMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(i, j) = static_cast<double>(m(i, j));
        }
    }
    return out;
}

void require_symmetric(const IntMatrix& m) {
    if (m.size() == 0) {
        throw std::invalid_argument("spectrum of an empty matrix");
    }
    if (!m.is_symmetric()) {
        throw std::invalid_argument("matrix is not symmetric");
    }
}

}  // namespace

Spectrum symmetric_spectrum(const IntMatrix& m, MatrixKind kind) {
    require_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver did not converge");
    }
    const auto& ev = solver.eigenvalues();
    Spectrum s{std::vector<double>(ev.data(), ev.data() + ev.size()), kind};
    std::reverse(s.values.begin(), s.values.end());
    return s;
}

EigenSystem symmetric_eigensystem(const IntMatrix& m, MatrixKind kind) {
    require_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver did not converge");
    }
    const auto n = static_cast<Eigen::Index>(m.size());
    EigenSystem out;
    out.spectrum.source = kind;
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        out.spectrum.values.push_back(solver.eigenvalues()(k));
        const auto col = solver.eigenvectors().col(k);
        out.vectors.emplace_back(col.data(), col.data() + n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials

CharPoly char_poly(const IntMatrix& m) {
    const std::size_t n = m.size();
    // c[k] are the coefficients of det(xI - M).
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    std::vector<BigInt> mk(n * n);   // M_k
    std::vector<BigInt> amk(n * n);  // M * M_k
    for (std::size_t k = 1; k <= n; ++k) {
        if (k == 1) {
            for (std::size_t i = 0; i < n; ++i) {
                mk[i * n + i] = 1;
            }
        } else {
            for (std::size_t i = 0; i < n * n; ++i) {
                mk[i] = amk[i];
            }
            for (std::size_t i = 0; i < n; ++i) {
                mk[i * n + i] += c[n - k + 1];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                BigInt acc = 0;
                for (std::size_t t = 0; t < n; ++t) {
                    if (const auto a = m(i, t); a != 0) {
                        acc += a * mk[t * n + j];
                    }
                }
                amk[i * n + j] = std::move(acc);
            }
        }
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            trace += amk[i * n + i];
        }
        c[n - k] = -trace / static_cast<long long>(k);
    }
    if (n % 2 == 1) {
        for (auto& x : c) {
            x = -x;
        }
    }
    return CharPoly{std::move(c)};
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) {
        return false;
    }
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) {
            return n == q;
        }
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

// Primes below 2^62, descending; each contributes more than 61 bits.
u64 nth_prime(std::size_t index) {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        for (u64 c = (u64{1} << 62) - 1; out.size() < 256; c -= 2) {
            if (is_prime_u64(c)) {
                out.push_back(c);
            }
        }
        return out;
    }();
    if (index >= primes.size()) {
        throw std::runtime_error("characteristic polynomial needs more CRT primes than available");
    }
    return primes[index];
}

// det(xI - M) mod p via reduction to upper Hessenberg form.
std::vector<u64> char_poly_mod_p(const IntMatrix& m, u64 p) {
    const std::size_t n = m.size();
    std::vector<u64> h(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
            h[i * n + j] = static_cast<u64>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && at(pivot, j) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        if (pivot != j + 1) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(at(pivot, c), at(j + 1, c));
            }
            for (std::size_t r = 0; r < n; ++r) {
                std::swap(at(r, pivot), at(r, j + 1));
            }
        }
        const u64 inv = pow_mod(at(j + 1, j), p - 2, p);
        for (std::size_t r = j + 2; r < n; ++r) {
            const u64 u = mul_mod(at(r, j), inv, p);
            if (u == 0) {
                continue;
            }
            // row_r -= u * row_{j+1}
            for (std::size_t c = j; c < n; ++c) {
                at(r, c) = (at(r, c) + p - mul_mod(u, at(j + 1, c), p)) % p;
            }
            // col_{j+1} += u * col_r
            for (std::size_t r2 = 0; r2 < n; ++r2) {
                at(r2, j + 1) = (at(r2, j + 1) + mul_mod(u, at(r2, r), p)) % p;
            }
        }
    }

    // polys[m] = det(xI - H[0..m, 0..m]), coefficients ascending.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        auto& cur = polys[k];
        cur.assign(k + 1, 0);
        const auto& prev = polys[k - 1];
        const u64 diag = at(k - 1, k - 1);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] = (cur[d + 1] + prev[d]) % p;
            cur[d] = (cur[d] + p - mul_mod(diag, prev[d], p)) % p;
        }
        u64 t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t = mul_mod(t, at(k - i, k - i - 1), p);
            if (t == 0) {
                break;
            }
            const u64 f = mul_mod(t, at(k - i - 1, k - 1), p);
            if (f == 0) {
                continue;
            }
            const auto& lower = polys[k - i - 1];
            for (std::size_t d = 0; d < lower.size(); ++d) {
                cur[d] = (cur[d] + p - mul_mod(f, lower[d], p)) % p;
            }
        }
    }
    return polys[n];
}

double coefficient_bound_bits(const IntMatrix& m) {
    // |c_k| <= e_{n-k}(row norms) <= prod (1 + ||row_i||), by Hadamard on
    // every principal minor.
    double bits = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        double sq = 0.0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            const double v = static_cast<double>(m(i, j));
            sq += v * v;
        }
        bits += std::log2(1.0 + std::sqrt(sq));
    }
    return bits;
}

}  // namespace

CharPoly char_poly_modular(const IntMatrix& m) {
    const std::size_t n = m.size();
    const double needed_bits = coefficient_bound_bits(m) + 4.0;
    std::vector<BigInt> value(n + 1, 0);
    BigInt modulus = 1;
    double modulus_bits = 0.0;
    for (std::size_t idx = 0; modulus_bits < needed_bits; ++idx) {
        const u64 p = nth_prime(idx);
        modulus_bits += std::log2(static_cast<double>(p));
        const auto residues = char_poly_mod_p(m, p);
        const u64 modulus_mod_p = static_cast<u64>(modulus % p);
        const u64 inv = pow_mod(modulus_mod_p, p - 2, p);
        for (std::size_t k = 0; k <= n; ++k) {
            const u64 current = static_cast<u64>(value[k] % p);
            const u64 delta = mul_mod((residues[k] + p - current) % p, inv, p);
            value[k] += modulus * delta;
        }
        modulus *= p;
    }
    const BigInt half = modulus / 2;
    for (auto& v : value) {
        if (v > half) {
            v -= modulus;
        }
    }
    if (n % 2 == 1) {
        for (auto& v : value) {
            v = -v;
        }
    }
    return CharPoly{std::move(value)};
}

// ---------------------------------------------------------------------------
// Interpolation

double interpolated_eigenvalue(const Spectrum& s, std::size_t j) {
    const std::size_t n = s.size();
    if (n == 0) {
        throw std::invalid_argument("interpolation of an empty spectrum");
    }
    if (j < 1 || j > 3 * n) {
        throw std::out_of_range("interpolated rank outside [1, 3n]");
    }
    const std::size_t whole = j / 3;
    const double frac = static_cast<double>(j % 3) / 3.0;
    const std::size_t lo = std::clamp<std::size_t>(whole, 1, n);
    const std::size_t hi = std::clamp<std::size_t>(whole + 1, 1, n);
    return s.at(lo) + frac * (s.at(hi) - s.at(lo));
}

std::vector<double> interpolate_spectrum(const Spectrum& s) {
    if (s.size() == 0) {
        throw std::invalid_argument("interpolation of an empty spectrum");
    }
    std::vector<double> out(3 * s.size());
    for (std::size_t j = 1; j <= out.size(); ++j) {
        out[j - 1] = interpolated_eigenvalue(s, j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Certification

std::vector<EigenCertificate> certify_spectrum(const IntMatrix& m) {
    require_symmetric(m);
    const Eigen::MatrixXd a = to_eigen(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver did not converge");
    }
    const auto n = a.rows();
    const Eigen::MatrixXd& v = solver.eigenvectors();
    const Eigen::VectorXd& lambda = solver.eigenvalues();

    const Eigen::MatrixXd residual_matrix = a * v - v * lambda.asDiagonal();
    const Eigen::MatrixXd defect = a - v * lambda.asDiagonal() * v.transpose();
    const Eigen::MatrixXd gram = v.transpose() * v - Eigen::MatrixXd::Identity(n, n);

    const double eps = std::numeric_limits<double>::epsilon();
    const double max_abs_lambda = lambda.cwiseAbs().maxCoeff();
    // Rounding allowance for forming `defect` in floating point.
    const double rounding = 1.01 * static_cast<double>(n + 2) * eps *
                            (a.norm() + static_cast<double>(n) * max_abs_lambda);
    const double weyl = defect.norm() + rounding;
    const double orthogonality = gram.norm() + static_cast<double>(n + 2) * eps * static_cast<double>(n);

    std::vector<EigenCertificate> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        EigenCertificate c;
        c.rank = static_cast<std::size_t>(n - k);
        c.value = lambda(k);
        c.residual = residual_matrix.col(k).norm() / v.col(k).norm();
        c.bound = weyl + std::abs(lambda(k)) * orthogonality;
        out.push_back(c);
    }
    return out;
}

EigenCertificate certify_eigenvalue(const IntMatrix& m, std::size_t rank) {
    if (rank < 1 || rank > m.size()) {
        throw std::out_of_range("eigenvalue rank outside [1, n]");
    }
    return certify_spectrum(m)[rank - 1];
}

}  // namespace graphrefute
