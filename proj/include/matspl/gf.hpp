#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matspl/matroid.hpp"
#include "matspl/splice.hpp"

namespace matspl::gf {

// Dense matrix over a prime field GF(p), p in {2,3,5,7}, with column labels.
struct GFMatrix {
    int p = 2;
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> entries;  // row-major, values in [0, p)
    std::vector<std::string> col_labels;

    std::uint8_t at(int r, int c) const {
        return entries[static_cast<size_t>(r) * static_cast<size_t>(cols) +
                       static_cast<size_t>(c)];
    }
    std::uint8_t& at(int r, int c) {
        return entries[static_cast<size_t>(r) * static_cast<size_t>(cols) +
                       static_cast<size_t>(c)];
    }
    static GFMatrix zero(int p, int rows, int cols, std::vector<std::string> labels);
};

void check_prime(int p);
int gf_inverse(int value, int p);

// Rank over GF(p) of the columns selected by the mask.
int column_rank(const GFMatrix& mat, Mask columns);

// The matroid of linear dependence on the columns.
Matroid column_matroid(const GFMatrix& mat);

// Representation of the restriction to the selected columns.
GFMatrix restrict_columns(const GFMatrix& mat, Mask columns);

// Representation of the contraction by the selected columns (pivot rows of a
// column basis of the contracted set are removed).
GFMatrix contract_columns(const GFMatrix& mat, Mask columns);

// Block construction of a splice of the matroids represented by rep_m and
// rep_n (matched via their column matroids): reduce rep_m to
// [I R S / 0 0 T], align rep_n to [T U / 0 V] using unique representability
// over GF(2)/GF(3), and stack with an optional upper-right block w.
GFMatrix splice_representation(const GFMatrix& rep_m, const GFMatrix& rep_n,
                               const GFMatrix* w = nullptr);

}  // namespace matspl::gf
