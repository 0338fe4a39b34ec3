#include "matspl/gf.hpp"

#include <algorithm>

namespace matspl::gf {

GFMatrix GFMatrix::zero(int p, int rows, int cols, std::vector<std::string> labels) {
    check_prime(p);
    GFMatrix out;
    out.p = p;
    out.rows = rows;
    out.cols = cols;
    out.entries.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
    out.col_labels = std::move(labels);
    if (static_cast<int>(out.col_labels.size()) != cols)
        throw Error("column label count does not match the matrix shape");
    return out;
}

void check_prime(int p) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw Error("field order must be one of 2, 3, 5, 7");
}

int gf_inverse(int value, int p) {
    value %= p;
    for (int x = 1; x < p; ++x)
        if (value * x % p == 1) return x;
    throw Error("zero has no inverse");
}

namespace {

// Gauss-Jordan on the selected pivot columns, in order.  Rows below the
// returned count are zero on every column spanned by the pivots.
struct Elimination {
    std::vector<int> work;  // row-major copy
    int rows, cols, p;
    int pivots = 0;

    explicit Elimination(const GFMatrix& mat)
        : work(mat.entries.begin(), mat.entries.end()),
          rows(mat.rows), cols(mat.cols), p(mat.p) {}

    int& at(int r, int c) { return work[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return work[static_cast<size_t>(r) * cols + c]; }

    bool reduce_column(int c) {
        int pr = -1;
        for (int r = pivots; r < rows; ++r)
            if (at(r, c) % p != 0) { pr = r; break; }
        if (pr < 0) return false;
        for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(pivots, j));
        int inv = gf_inverse(at(pivots, c), p);
        for (int j = 0; j < cols; ++j) at(pivots, j) = at(pivots, j) * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == pivots) continue;
            int f = at(r, c) % p;
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                at(r, j) = (at(r, j) + (p - f) * at(pivots, j)) % p;
        }
        ++pivots;
        return true;
    }
};

}  // namespace

int column_rank(const GFMatrix& mat, Mask columns) {
    check_prime(mat.p);
    Elimination elim(mat);
    Mask bits = columns;
    while (bits) {
        int c = std::countr_zero(bits);
        elim.reduce_column(c);
        bits &= bits - 1;
    }
    return elim.pivots;
}

Matroid column_matroid(const GFMatrix& mat) {
    GroundSet ground{mat.col_labels};
    const Mask full = ground.full();
    std::vector<std::uint8_t> table(size_t{1} << ground.size(), 0);
    for (Mask x = 0; ; ++x) {
        table[x] = static_cast<std::uint8_t>(column_rank(mat, x));
        if (x == full) break;
    }
    return Matroid::unchecked(std::move(ground), std::move(table));
}

GFMatrix restrict_columns(const GFMatrix& mat, Mask columns) {
    GFMatrix out;
    out.p = mat.p;
    out.rows = mat.rows;
    out.cols = popcount(columns);
    out.entries.reserve(static_cast<size_t>(out.rows) * out.cols);
    for (int r = 0; r < mat.rows; ++r)
        for (int c = 0; c < mat.cols; ++c)
            if (columns & (Mask{1} << c)) out.entries.push_back(mat.at(r, c));
    for (int c = 0; c < mat.cols; ++c)
        if (columns & (Mask{1} << c)) out.col_labels.push_back(mat.col_labels[static_cast<size_t>(c)]);
    return out;
}

GFMatrix contract_columns(const GFMatrix& mat, Mask columns) {
    Elimination elim(mat);
    Mask bits = columns;
    while (bits) {
        int c = std::countr_zero(bits);
        elim.reduce_column(c);
        bits &= bits - 1;
    }
    GFMatrix out;
    out.p = mat.p;
    out.rows = mat.rows - elim.pivots;
    out.cols = mat.cols - popcount(columns);
    out.entries.reserve(static_cast<size_t>(out.rows) * out.cols);
    for (int r = elim.pivots; r < mat.rows; ++r)
        for (int c = 0; c < mat.cols; ++c)
            if (!(columns & (Mask{1} << c))) out.entries.push_back(static_cast<std::uint8_t>(elim.at(r, c)));
    for (int c = 0; c < mat.cols; ++c)
        if (!(columns & (Mask{1} << c))) out.col_labels.push_back(mat.col_labels[static_cast<size_t>(c)]);
    return out;
}

GFMatrix splice_representation(const GFMatrix& rep_m, const GFMatrix& rep_n, const GFMatrix* w) {
    check_prime(rep_m.p);
    if (rep_m.p != rep_n.p) throw Error("field orders differ");
    const int p = rep_m.p;
    if (p != 2 && p != 3)
        throw Error("splice representation is supported over GF(2) and GF(3)");

    Matroid m = column_matroid(rep_m);
    Matroid n = column_matroid(rep_n);
    splice::MatchedPair pair = splice::matched_or_throw(m, n);

    const Mask s_cols = pair.left_only();  // in M = rep_m column coordinates
    const Mask overlap_m = pair.overlap();

    // Greedy basis of M restricted to A-B.
    Mask x_cols = 0;
    {
        Mask bits = s_cols;
        while (bits) {
            Mask bit = bits & (0u - bits);
            if (m.rank(x_cols | bit) > m.rank(x_cols)) x_cols |= bit;
            bits &= bits - 1;
        }
    }
    const int k = popcount(x_cols);

    Elimination em(rep_m);
    {
        Mask bits = x_cols;
        while (bits) {
            int c = std::countr_zero(bits);
            if (!em.reduce_column(c)) throw NotRepresentable("matrix does not represent M");
            bits &= bits - 1;
        }
    }
    // Greedy pivot columns of the overlap block below the first k rows.
    std::vector<int> d_cols;
    {
        Mask bits = overlap_m;
        while (bits) {
            int c = std::countr_zero(bits);
            if (em.reduce_column(c)) d_cols.push_back(c);
            bits &= bits - 1;
        }
    }
    const int t = em.pivots - k;
    if (t > 5) throw SizeCapExceeded("overlap alignment beyond rank 5");

    Elimination en(rep_n);
    for (int c : d_cols) {
        auto idx = n.ground().index_of(m.ground().label(c));
        if (!en.reduce_column(*idx)) throw NotRepresentable("matrix does not represent N");
    }
    if (en.pivots != t) throw NotRepresentable("overlap ranks disagree");
    {
        // Every overlap column must now live in the first t rows of rep_n.
        Mask bits = overlap_m;
        while (bits) {
            int c = std::countr_zero(bits);
            int cn = *n.ground().index_of(m.ground().label(c));
            for (int r = t; r < en.rows; ++r)
                if (en.at(r, cn) % p != 0)
                    throw NotRepresentable("overlap columns not spanned by the shared basis");
            bits &= bits - 1;
        }
    }

    // Find diagonal row and column scalings making the two overlap blocks
    // equal; unique representability over GF(2)/GF(3) guarantees a solution
    // for genuine representations.
    std::vector<int> overlap_list;
    {
        Mask bits = overlap_m;
        while (bits) {
            overlap_list.push_back(std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    std::vector<int> row_scale(static_cast<size_t>(std::max(t, 1)), 1);
    std::vector<int> col_scale(overlap_list.size(), 1);
    bool aligned = false;
    std::vector<int> dr(static_cast<size_t>(t), 1);
    auto try_dr = [&]() -> bool {
        for (size_t ci = 0; ci < overlap_list.size(); ++ci) {
            int c = overlap_list[ci];
            int cn = *n.ground().index_of(m.ground().label(c));
            int dc = 0;
            for (int j = 0; j < t; ++j) {
                int lhs = em.at(k + j, c) % p;
                int rhs = dr[static_cast<size_t>(j)] * en.at(j, cn) % p;
                if (rhs == 0) {
                    if (lhs != 0) return false;
                    continue;
                }
                int need = lhs * gf_inverse(rhs, p) % p;
                if (need == 0) return false;
                if (dc == 0) dc = need;
                else if (dc != need) return false;
            }
            col_scale[ci] = dc == 0 ? 1 : dc;
        }
        return true;
    };
    auto enumerate = [&](auto&& self, int pos) -> bool {
        if (pos == t) return try_dr();
        for (int v = 1; v < p; ++v) {
            dr[static_cast<size_t>(pos)] = v;
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    if (enumerate(enumerate, 0)) {
        aligned = true;
        row_scale.assign(dr.begin(), dr.end());
    }
    if (!aligned) throw NotRepresentable("no row/column scaling aligns the overlap blocks");

    for (int j = 0; j < t; ++j)
        for (int c = 0; c < en.cols; ++c)
            en.at(j, c) = en.at(j, c) * row_scale[static_cast<size_t>(j)] % p;
    for (size_t ci = 0; ci < overlap_list.size(); ++ci) {
        int cn = *n.ground().index_of(m.ground().label(overlap_list[ci]));
        for (int r = 0; r < en.rows; ++r) en.at(r, cn) = en.at(r, cn) * col_scale[ci] % p;
    }
    for (size_t ci = 0; ci < overlap_list.size(); ++ci) {
        int c = overlap_list[ci];
        int cn = *n.ground().index_of(m.ground().label(c));
        for (int j = 0; j < t; ++j)
            if (em.at(k + j, c) % p != en.at(j, cn) % p)
                throw NotRepresentable("overlap blocks failed to align");
    }

    // Keep the nonzero rows of the N side below the shared block.
    std::vector<int> v_rows;
    for (int r = t; r < en.rows; ++r) {
        bool zero = true;
        for (int c = 0; c < en.cols && zero; ++c)
            if (en.at(r, c) % p != 0) zero = false;
        if (!zero) v_rows.push_back(r);
    }
    const int v = static_cast<int>(v_rows.size());

    const GroundSet& uni = pair.ground();
    std::vector<int> right_only_cols;  // union positions of B-A
    for (int i = 0; i < uni.size(); ++i)
        if (pair.right_only() & (Mask{1} << i)) right_only_cols.push_back(i);
    if (w) {
        if (w->p != p || w->rows != k || w->cols != static_cast<int>(right_only_cols.size()))
            throw Error("upper-right block has the wrong shape");
    }

    GFMatrix out = GFMatrix::zero(p, k + t + v, uni.size(), uni.labels());
    for (int i = 0; i < uni.size(); ++i) {
        const std::string& label = uni.label(i);
        if (auto cm = m.ground().index_of(label)) {
            for (int r = 0; r < k + t; ++r) out.at(r, i) = static_cast<std::uint8_t>(em.at(r, *cm) % p);
        } else {
            int cn = *n.ground().index_of(label);
            if (w) {
                int wc = static_cast<int>(std::find(right_only_cols.begin(), right_only_cols.end(), i) -
                                          right_only_cols.begin());
                for (int r = 0; r < k; ++r) out.at(r, i) = w->at(r, wc);
            }
            for (int j = 0; j < t; ++j) out.at(k + j, i) = static_cast<std::uint8_t>(en.at(j, cn) % p);
            for (int j = 0; j < v; ++j)
                out.at(k + t + j, i) = static_cast<std::uint8_t>(en.at(v_rows[static_cast<size_t>(j)], cn) % p);
        }
    }
    return out;
}

}  // namespace matspl::gf
