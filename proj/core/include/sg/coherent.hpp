#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sg/matrix.hpp"

namespace sg {

/// Structure constants p_ij^l with A_i A_j = sum_l p_ij^l A_l.
class IntersectionNumbers {
public:
  IntersectionNumbers() = default;
  explicit IntersectionNumbers(std::size_t rank)
      : rank_(rank), values_(rank * rank * rank, 0) {}

  std::size_t rank() const noexcept { return rank_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t l) const noexcept {
    return values_[(i * rank_ + j) * rank_ + l];
  }
  std::int64_t& operator()(std::size_t i, std::size_t j, std::size_t l) noexcept {
    return values_[(i * rank_ + j) * rank_ + l];
  }

  /// (B_i)_{lj} = p_ij^l.
  Matrix intersection_matrix(std::size_t i) const;

  bool operator==(const IntersectionNumbers&) const = default;

private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> values_;
};

struct ConfigurationFlags {
  bool homogeneous = false;
  bool commutative = false;
  bool symmetric = false;

  bool is_association_scheme() const noexcept { return homogeneous && commutative && symmetric; }
};

/// Result of checking the four coherent-configuration axioms on a coloring.
struct AxiomReport {
  bool partition = false;         // classes partition J, colors 0..r-1 all used
  bool transpose_closed = false;  // c(x,y) determines c(y,x)
  bool diagonal_classes = false;  // a class meeting the diagonal lies on it
  bool constant_products = false; // p_ij^l independent of the representative
  bool all() const noexcept {
    return partition && transpose_closed && diagonal_classes && constant_products;
  }
};

AxiomReport verify_axioms(std::size_t n, std::span<const int> colors);

/// A coherent configuration stored as an n x n class-index matrix plus
/// per-class cell lists. Construction validates all four axioms.
class CoherentConfiguration {
public:
  /// `colors` is row-major n x n with labels 0..r-1. Throws NumericError
  /// ("not coherent") when an axiom fails.
  CoherentConfiguration(std::size_t n, std::vector<int> colors);

  std::size_t order() const noexcept { return n_; }
  std::size_t rank() const noexcept { return cells_.size(); }
  int color(std::size_t x, std::size_t y) const noexcept { return colors_[x * n_ + y]; }
  std::span<const int> colors() const noexcept { return colors_; }

  /// Flat positions x*n+y of class i, row-major.
  std::span<const std::uint32_t> cells(std::size_t i) const noexcept { return cells_[i]; }
  std::size_t transpose_of(std::size_t i) const noexcept { return transpose_[i]; }
  std::span<const std::size_t> fibers() const noexcept { return fibers_; }
  const IntersectionNumbers& intersection_numbers() const noexcept { return p_; }
  const ConfigurationFlags& flags() const noexcept { return flags_; }

  Matrix class_matrix(std::size_t i) const;

private:
  std::size_t n_;
  std::vector<int> colors_;
  std::vector<std::vector<std::uint32_t>> cells_;
  std::vector<std::size_t> transpose_;
  std::vector<std::size_t> fibers_;
  IntersectionNumbers p_;
  ConfigurationFlags flags_;
};

/// Smallest coherent configuration whose algebra contains every seed, by
/// two-dimensional Weisfeiler-Leman refinement. Colors are renumbered by first
/// occurrence in a row-major scan after every round, so the output is
/// deterministic; class 0 always contains (0,0).
CoherentConfiguration coherent_closure(std::span<const Matrix> seeds);

ConfigurationFlags classify(const CoherentConfiguration& cfg);

const IntersectionNumbers& intersection_numbers(const CoherentConfiguration& cfg);

struct Membership {
  enum class Kind { belongs, splits, neither };
  Kind kind = Kind::neither;
  std::size_t index = 0; // class i for belongs(i) / splits(i)

  static std::string_view kind_name(Kind k) noexcept;
};

Membership membership(const CoherentConfiguration& cfg, const Matrix& a);

/// Class indices whose union is exactly the support of the 0/1 matrix `a`,
/// or nullopt when `a` is not such a union.
std::optional<std::vector<std::size_t>> class_decomposition(const CoherentConfiguration& cfg,
                                                            const Matrix& a);

/// Orthogonal projection onto span{A_0..A_d}: each entry becomes the average
/// of m over its class.
Matrix project(const CoherentConfiguration& cfg, const Matrix& m);

} // namespace sg
