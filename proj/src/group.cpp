#include "qrw/group.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qrw/errors.hpp"

namespace qrw {

namespace {

std::string describe(int g, int h) {
  std::ostringstream os;
  os << "(" << g << ", " << h << ")";
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ <= 0) throw ParseError("group order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (table_.size() != n * n) throw ParseError("mult_table must have order^2 entries");
  for (int v : table_)
    if (v < 0 || v >= order_) throw ParseError("mult_table entry out of range");

  // Latin square.
  for (int g = 0; g < order_; ++g) {
    std::vector<bool> row(n, false), col(n, false);
    for (int h = 0; h < order_; ++h) {
      row[static_cast<std::size_t>(mult(g, h))] = true;
      col[static_cast<std::size_t>(mult(h, g))] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      throw AxiomError("mult_table is not a Latin square at element " + std::to_string(g));
  }

  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g) ok = mult(e, g) == g && mult(g, e) == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw AxiomError("mult_table has no two-sided identity");

  inverse_.assign(n, -1);
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h)
      if (mult(g, h) == identity_ && mult(h, g) == identity_) inverse_[static_cast<std::size_t>(g)] = h;
  for (int g = 0; g < order_; ++g)
    if (inverse_[static_cast<std::size_t>(g)] < 0)
      throw AxiomError("element " + std::to_string(g) + " has no two-sided inverse");

  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mult(mult(a, b), c) != mult(a, mult(b, c)))
          throw AxiomError("associativity fails at " + describe(a, b) + "·" + std::to_string(c));

  if (labels_.empty()) {
    for (int g = 0; g < order_; ++g) labels_.push_back("g" + std::to_string(g));
  } else if (labels_.size() != n) {
    throw ParseError("label count differs from group order");
  }
}

FiniteGroup FiniteGroup::cyclic(int order) {
  if (order <= 0) throw DomainError("cyclic group order must be positive");
  std::vector<int> table;
  std::vector<std::string> labels;
  for (int g = 0; g < order; ++g) {
    labels.push_back(g == 0 ? "e" : "a^" + std::to_string(g));
    for (int h = 0; h < order; ++h) table.push_back((g + h) % order);
  }
  if (order == 2) labels[1] = "u";
  return FiniteGroup(order, std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(int degree) {
  if (degree <= 0 || degree > 5) throw DomainError("symmetric group degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  const int order = static_cast<int>(perms.size());
  std::vector<int> table;
  std::vector<std::string> labels;
  for (const auto& g : perms) {
    std::string label = "[";
    for (int x : g) label += std::to_string(x + 1);
    labels.push_back(label + "]");
    for (const auto& h : perms) {
      // (g·h)(x) = g(h(x))
      std::vector<int> gh(g.size());
      for (std::size_t x = 0; x < g.size(); ++x) gh[x] = g[static_cast<std::size_t>(h[x])];
      table.push_back(index_of(gh));
    }
  }
  return FiniteGroup(order, std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& doc) {
  try {
    const int order = doc.at("order").get<int>();
    auto table = doc.at("mult_table").get<std::vector<int>>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    return FiniteGroup(order, std::move(table), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group file: ") + e.what());
  }
}

FiniteGroup FiniteGroup::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("group file " + path + ": " + e.what());
  }
  return from_json(doc);
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != identity_; x = mult(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h)
      if (mult(g, h) != mult(h, g)) return false;
  return true;
}

namespace {

std::complex<double> root_of_unity(int k, int n) {
  const double angle = 2.0 * std::numbers::pi * k / n;
  double re = std::cos(angle), im = std::sin(angle);
  if (std::abs(re) < 1e-15) re = 0.0;
  if (std::abs(im) < 1e-15) im = 0.0;
  return {re, im};
}

// Extends an assignment on generators to the generated subgroup; returns false
// if two words for the same element receive different values.
bool propagate(const FiniteGroup& g, const std::vector<int>& gens,
               const std::vector<std::complex<double>>& gen_values,
               std::vector<std::complex<double>>& values, std::vector<bool>& seen) {
  const auto n = static_cast<std::size_t>(g.order());
  values.assign(n, {0.0, 0.0});
  seen.assign(n, false);
  std::vector<int> frontier{g.identity()};
  values[static_cast<std::size_t>(g.identity())] = 1.0;
  seen[static_cast<std::size_t>(g.identity())] = true;
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = g.mult(x, gens[k]);
      const auto v = values[static_cast<std::size_t>(x)] * gen_values[k];
      if (seen[static_cast<std::size_t>(y)]) {
        if (std::abs(values[static_cast<std::size_t>(y)] - v) > 1e-9) return false;
      } else {
        seen[static_cast<std::size_t>(y)] = true;
        values[static_cast<std::size_t>(y)] = v;
        frontier.push_back(y);
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::complex<double>>> one_dimensional_representations(const FiniteGroup& g) {
  // Greedy generating set.
  std::vector<int> gens;
  std::vector<std::complex<double>> scratch;
  std::vector<bool> covered;
  std::vector<std::complex<double>> ones;
  for (int x = 0; x < g.order(); ++x) {
    ones.assign(gens.size(), 1.0);
    propagate(g, gens, ones, scratch, covered);
    if (!covered[static_cast<std::size_t>(x)]) gens.push_back(x);
  }

  std::vector<std::vector<std::complex<double>>> result;
  std::vector<std::complex<double>> assignment;
  std::vector<std::complex<double>> values;
  std::vector<bool> seen;

  auto search = [&](auto&& self, std::size_t depth) -> void {
    std::vector<int> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(depth));
    if (!propagate(g, prefix, assignment, values, seen)) return;
    if (depth == gens.size()) {
      result.push_back(values);
      return;
    }
    const int n = g.element_order(gens[depth]);
    for (int k = 0; k < n; ++k) {
      assignment.push_back(root_of_unity(k, n));
      self(self, depth + 1);
      assignment.pop_back();
    }
  };
  search(search, 0);
  return result;
}

}  // namespace qrw
