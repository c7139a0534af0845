#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tcsphere {

/// Dense row vector over GF(2), packed 64 coordinates per word.
class Gf2Vector {
public:
    explicit Gf2Vector(std::size_t size = 0) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value) {
            words_[i / 64] |= mask;
        } else {
            words_[i / 64] &= ~mask;
        }
    }

    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    Gf2Vector& operator^=(const Gf2Vector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    bool is_zero() const {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    /// Index of the lowest set coordinate, or size() when zero.
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
        return size_;
    }

private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

/// Incrementally maintained row-echelon basis of a subspace of GF(2)^n.
class Gf2Span {
public:
    explicit Gf2Span(std::size_t dimension) : dimension_(dimension), pivot_row_(dimension, npos) {}

    /// Adds `v` to the spanning set; returns true when the rank grew.
    bool insert(Gf2Vector v) {
        reduce(v);
        if (v.is_zero()) return false;
        const std::size_t pivot = v.lowest_set();
        pivot_row_[pivot] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(Gf2Vector v) const {
        reduce(v);
        return v.is_zero();
    }

    std::size_t rank() const { return rows_.size(); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void reduce(Gf2Vector& v) const {
        // Each stored row has a distinct pivot and is zero below it, so a single
        // ascending sweep clears every pivot coordinate of v.
        for (std::size_t i = 0; i < dimension_; ++i) {
            if (v.get(i) && pivot_row_[i] != npos) v ^= rows_[pivot_row_[i]];
        }
    }

    std::size_t dimension_;
    std::vector<std::size_t> pivot_row_;
    std::vector<Gf2Vector> rows_;
};

}  // namespace tcsphere
