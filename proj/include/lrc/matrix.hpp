#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

/// Dense row-major matrix over one field.
class Mat {
  public:
    Mat() = default;
    Mat(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(rows * cols, field_->zero()) {}

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<FieldElement> row(std::size_t r) const {
        return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
    }

  private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> a_;
};

/// In-place reduced row echelon form; returns the pivot columns (rank =
/// pivot count). Column order is scanned left to right.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

/// Basis of the right null space as rows of a (cols - rank) x cols matrix.
Mat null_space(const Mat& m);

/// message * G.
std::vector<FieldElement> encode(const Mat& gen, std::span<const FieldElement> message);

}  // namespace lrc
