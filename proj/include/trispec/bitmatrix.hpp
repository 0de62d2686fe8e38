#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trispec/errors.hpp"

namespace trispec {

// Dense symmetric 0/1 adjacency matrix with zero diagonal, rows packed in
// 64-bit words.
class BitMatrix {
public:
    BitMatrix() : n_(0), words_per_row_(0) {}
    explicit BitMatrix(std::size_t n)
        : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

    // Validates symmetry and zero diagonal.
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t size() const { return n_; }

    bool test(std::size_t i, std::size_t j) const {
        return (bits_[i * words_per_row_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set_edge(std::size_t i, std::size_t j) {
        if (i == j) throw MatrixShapeError("BitMatrix: loop edge rejected");
        set_bit(i, j);
        set_bit(j, i);
    }

    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_per_row_; }
    std::size_t words_per_row() const { return words_per_row_; }

    std::size_t row_degree(std::size_t i) const;
    std::size_t common_neighbors(std::size_t i, std::size_t j) const;

    // Degree when regular, nullopt otherwise.
    std::optional<std::size_t> regular_degree() const;
    bool is_connected() const;
    std::size_t component_count() const;
    std::size_t edge_count() const;

    BitMatrix complement() const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void set_bit(std::size_t i, std::size_t j) {
        bits_[i * words_per_row_ + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    }

    std::size_t n_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
};

} // namespace trispec
