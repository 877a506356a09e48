#include "qrw/cocycle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "qrw/errors.hpp"
#include "qrw/walk.hpp"

namespace qrw {

Functional assoc_generator(const OperatorMap& phi, const Vector& c, const Vector& d) {
  const HatSpace hat{phi.target_dim() - 1};
  if (c.size() != hat.noise_dim || d.size() != hat.noise_dim)
    throw DimensionError("assoc_generator: c and d must have the noise dimension of φ");
  const Vector ch = hat.lift(c), dh = hat.lift(d);
  const Complex cd = c.dot(d);
  const auto& b = phi.source();
  RowVector out(b.dim());
  for (Index i = 0; i < b.dim(); ++i) out(i) = ch.dot(phi[i] * dh) + cd * b.counit(i);
  return {out};
}

CocycleReference::CocycleReference(OperatorMap phi) : phi_(std::move(phi)) {}

std::shared_ptr<const ConvolutionSemigroup> CocycleReference::semigroup_for(const Vector& c, const Vector& d) const {
  std::vector<double> key;
  for (const auto* v : {&c, &d})
    for (Index i = 0; i < v->size(); ++i) {
      key.push_back((*v)(i).real());
      key.push_back((*v)(i).imag());
    }
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto made = std::make_shared<const ConvolutionSemigroup>(phi_.source(), assoc_generator(phi_, c, d));
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(made)).first->second;
}

Functional CocycleReference::semigroup(const Vector& c, const Vector& d, double s) const {
  return semigroup_for(c, d)->evaluate_functional(s);
}

Functional CocycleReference::matrix_elements(const StepFunction& f, const StepFunction& g, double t) const {
  if (f.noise_dim() != g.noise_dim() || f.noise_dim() != phi_.target_dim() - 1)
    throw DimensionError("step functions do not match the noise dimension of φ");
  const double horizon = std::max(f.total_time(), g.total_time());
  if (t < 0.0 || t > horizon * (1.0 + 1e-12)) throw DomainError("time t lies beyond the step functions");

  std::vector<double> cuts{0.0, t, f.total_time(), g.total_time()};
  for (double x : f.breakpoints()) cuts.push_back(x);
  for (double x : g.breakpoints()) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());

  const auto& b = phi_.source();
  Functional acc{b.counit};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = std::min(cuts[i + 1], t);
    if (!(hi > lo)) continue;
    const double mid = 0.5 * (lo + hi);
    acc = convolve(b, acc, semigroup(f.value_at(mid), g.value_at(mid), hi - lo));
  }
  acc.values *= exponential_overlap(f, g, t);
  return acc;
}

Complex CocycleReference::matrix_element(Index b, const StepFunction& f, const StepFunction& g, double t) const {
  return matrix_elements(f, g, t)(b);
}

std::size_t CocycleReference::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

Complex cocycle_matrix_element(const OperatorMap& phi, Index b, const StepFunction& f, const StepFunction& g,
                               double t) {
  return CocycleReference(phi).matrix_element(b, f, g, t);
}

double FunctionalComparison::max_error() const { return (reference.values - walk.values).cwiseAbs().maxCoeff(); }

std::vector<FunctionalComparison> compare_with_walk(const CocycleReference& reference, BialgebraPtr b,
                                                    const ImplementingTriple& triple, const StepFunction& f,
                                                    const StepFunction& g, double t, std::vector<double> h_list) {
  const auto chi = Character::counit(*b);
  const auto built = build_generator(b, triple, chi);
  if (built.source_ptr() != reference.generator().source_ptr() ||
      built.target_dim() != reference.generator().target_dim() ||
      max_difference(built, reference.generator()) >= 1e-10)
    throw DomainError("generator does not match the implementing triple");

  std::sort(h_list.begin(), h_list.end(), std::greater<>());
  const auto ref = reference.matrix_elements(f, g, t);
  std::vector<FunctionalComparison> rows;
  for (double h : h_list) {
    const auto psi = build_walk(b, triple, chi, h);
    rows.push_back({h, GridSpec::from_time(t, h).n, ref, walk_functional(psi, f, g, t, h)});
  }
  return rows;
}

std::vector<CrossValidationRow> cross_validate_against_walk(const OperatorMap& phi, const ImplementingTriple& triple,
                                                            Index b, const StepFunction& f, const StepFunction& g,
                                                            double t, std::vector<double> h_list) {
  const CocycleReference reference(phi);
  std::vector<CrossValidationRow> rows;
  for (const auto& cmp : compare_with_walk(reference, phi.source_ptr(), triple, f, g, t, std::move(h_list)))
    rows.push_back({cmp.h, cmp.n, cmp.reference(b), cmp.walk(b), std::abs(cmp.reference(b) - cmp.walk(b))});
  return rows;
}

}  // namespace qrw
