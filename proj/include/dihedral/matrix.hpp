#ifndef DIHEDRAL_MATRIX_HPP
#define DIHEDRAL_MATRIX_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "finite_field.hpp"

namespace dihedral {

/// Dense matrix over a finite field; rows of element indices.
class GFMatrix {
  public:
    GFMatrix() = default;
    GFMatrix(std::shared_ptr<const FiniteField> field, unsigned cols)
        : field_(std::move(field)), cols_(cols) {}

    const std::shared_ptr<const FiniteField>& field() const { return field_; }
    unsigned cols() const { return cols_; }
    unsigned rows() const { return static_cast<unsigned>(rows_.size()); }
    const std::vector<std::uint32_t>& row(unsigned i) const { return rows_[i]; }
    const std::vector<std::vector<std::uint32_t>>& data() const { return rows_; }

    void append_row(std::vector<std::uint32_t> r) {
        if (r.size() != cols_) throw error(errc::field_mismatch, "row length mismatch");
        rows_.push_back(std::move(r));
    }

    /// In-place reduction to canonical reduced row echelon form; zero rows
    /// are dropped. Returns the pivot columns.
    std::vector<unsigned> rref() {
        const FiniteField& F = *field_;
        std::vector<unsigned> pivots;
        unsigned r = 0;
        for (unsigned c = 0; c < cols_ && r < rows_.size(); ++c) {
            unsigned sel = r;
            while (sel < rows_.size() && rows_[sel][c] == 0) ++sel;
            if (sel == rows_.size()) continue;
            std::swap(rows_[r], rows_[sel]);
            const std::uint32_t inv = F.inv(rows_[r][c]);
            if (inv != 1)
                for (auto& x : rows_[r]) x = F.mul(x, inv);
            for (unsigned i = 0; i < rows_.size(); ++i) {
                if (i == r || rows_[i][c] == 0) continue;
                const std::uint32_t factor = rows_[i][c];
                for (unsigned j = c; j < cols_; ++j)
                    rows_[i][j] = F.sub(rows_[i][j], F.mul(factor, rows_[r][j]));
            }
            pivots.push_back(c);
            ++r;
        }
        rows_.resize(r);
        pivots_ = pivots;
        return pivots;
    }

    const std::vector<unsigned>& pivots() const { return pivots_; }

    /// Reduce v against the RREF rows; returns the residue. v is in the row
    /// space iff the residue is zero. Valid only after rref().
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
        const FiniteField& F = *field_;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const unsigned c = pivots_[i];
            if (v[c] == 0) continue;
            const std::uint32_t factor = v[c];
            for (unsigned j = c; j < cols_; ++j)
                v[j] = F.sub(v[j], F.mul(factor, rows_[i][j]));
        }
        return v;
    }

    bool contains(const std::vector<std::uint32_t>& v) const {
        for (auto x : reduce(v))
            if (x != 0) return false;
        return true;
    }

    /// Basis of the right nullspace, returned in canonical RREF.
    GFMatrix nullspace() const {
        const FiniteField& F = *field_;
        std::vector<bool> is_pivot(cols_, false);
        for (unsigned c : pivots_) is_pivot[c] = true;
        GFMatrix ker(field_, cols_);
        for (unsigned f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<std::uint32_t> v(cols_, 0);
            v[f] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                v[pivots_[i]] = F.neg(rows_[i][f]);
            ker.append_row(std::move(v));
        }
        ker.rref();
        return ker;
    }

  private:
    std::shared_ptr<const FiniteField> field_;
    unsigned cols_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<unsigned> pivots_;
};

} // namespace dihedral

#endif
