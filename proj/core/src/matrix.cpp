#include "bitwist/matrix.hpp"

#include <optional>
#include <sstream>
#include <utility>

#include "bitwist/errors.hpp"

namespace bitwist {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw InvalidArgument("matrix data size mismatch");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

Integer AbelianInvariants::order() const {
  if (free_rank > 0) return 0;
  Integer prod = 1;
  for (const Integer& d : torsion) prod *= d;
  return prod;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const Integer& d : torsion) append("Z/" + d.get_str());
  return out;
}

namespace {

// Working state of the reduction; U and V are only maintained when asked.
class SmithReducer {
 public:
  SmithReducer(const IntMatrix& mat, bool track)
      : a_(mat), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(mat.rows());
      v_ = IntMatrix::identity(mat.cols());
    }
  }

  void run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_smallest_to(t)) break;
      for (;;) {
        bool dirty = clear_column(t);
        dirty = clear_row(t) || dirty;
        if (dirty) {
          move_smallest_to(t);
          continue;
        }
        // Pivot must divide the whole remaining block.
        auto bad = find_non_multiple(t);
        if (!bad) break;
        add_row(t, *bad, 1);
      }
      if (a_(t, t) < 0) negate_row(t);
    }
  }

  IntMatrix& diagonal() { return a_; }
  IntMatrix& left() { return u_; }
  IntMatrix& right() { return v_; }

 private:
  // Swaps the smallest non-zero |entry| of the block [t.., t..] to (t, t).
  bool move_smallest_to(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    for (std::size_t r = t; r < a_.rows(); ++r) {
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const Integer& v = a_(r, c);
        if (v != 0 && (!found || abs(v) < abs(a_(br, bc)))) {
          br = r;
          bc = c;
          found = true;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // Reduces entries below the pivot; true if some remainder is non-zero.
  bool clear_column(std::size_t t) {
    bool dirty = false;
    for (std::size_t r = t + 1; r < a_.rows(); ++r) {
      if (a_(r, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
      add_row(r, t, -q);
      if (a_(r, t) != 0) dirty = true;
    }
    return dirty;
  }

  bool clear_row(std::size_t t) {
    bool dirty = false;
    for (std::size_t c = t + 1; c < a_.cols(); ++c) {
      if (a_(t, c) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
      add_col(c, t, -q);
      if (a_(t, c) != 0) dirty = true;
    }
    return dirty;
  }

  std::optional<std::size_t> find_non_multiple(std::size_t t) const {
    for (std::size_t r = t + 1; r < a_.rows(); ++r) {
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (!mpz_divisible_p(a_(r, c).get_mpz_t(), a_(t, t).get_mpz_t())) return r;
      }
    }
    return std::nullopt;
  }

  // row dst += factor * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(dst, c) += factor * a_(src, c);
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) += factor * u_(src, c);
    }
  }

  // col dst += factor * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, dst) += factor * a_(r, src);
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) += factor * v_(r, src);
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    }
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    }
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
};

}  // namespace

SmithDecomposition smith_decomposition(const IntMatrix& mat) {
  SmithReducer reducer(mat, true);
  reducer.run();
  return {std::move(reducer.left()), std::move(reducer.diagonal()), std::move(reducer.right())};
}

AbelianInvariants smith_normal_form(const IntMatrix& mat) {
  SmithReducer reducer(mat, false);
  reducer.run();
  const IntMatrix& d = reducer.diagonal();
  AbelianInvariants out;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (d(i, i) == 0) continue;
    ++rank;
    if (d(i, i) != 1) out.torsion.push_back(d(i, i));
  }
  out.free_rank = mat.cols() - rank;
  return out;
}

Integer determinant(const IntMatrix& mat) {
  if (mat.rows() != mat.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = mat.rows();
  if (n == 0) return 1;
  IntMatrix a = mat;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_with, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace bitwist
