#pragma once

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"

namespace qrw {

/// A finite group given by its Cayley table. Elements are 0-based indices.
///
/// Construction validates the table exhaustively. Associativity is checked
/// over all triples of elements.
class FiniteGroup {
 public:
  /// `table` is the row-major multiplication table, table[g * order + h] = g·h.
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels = {});

  static FiniteGroup cyclic(int order);
  /// Symmetric group on `degree` letters; element 0 is the identity permutation.
  static FiniteGroup symmetric(int degree);
  /// Group file: {"order": n, "mult_table": [row-major, 0-based]}.
  static FiniteGroup from_json(const nlohmann::json& doc);
  static FiniteGroup load(const std::string& path);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mult(int g, int h) const { return table_[static_cast<std::size_t>(g * order_ + h)]; }
  int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
  int element_order(int g) const;
  bool is_abelian() const;
  const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& table() const { return table_; }

 private:
  int order_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

/// All homomorphisms G -> U(1), as value vectors over the elements. The
/// trivial homomorphism comes first.
std::vector<std::vector<std::complex<double>>> one_dimensional_representations(const FiniteGroup& g);

}  // namespace qrw
