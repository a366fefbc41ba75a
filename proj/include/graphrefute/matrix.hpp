#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace graphrefute {

// Dense square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

    std::size_t size() const { return n_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    std::int64_t trace() const {
        std::int64_t t = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    std::int64_t max_entry() const {
        std::int64_t m = 0;
        for (auto x : data_) {
            m = x > m ? x : m;
        }
        return m;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> data_;
};

}  // namespace graphrefute
