#include "ddsteps/conformal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <variant>

#include "ddsteps/lp.hpp"

namespace ddsteps {

namespace {

// A vertex of {v : A v = 0, (B v)_k = 0 off supp(B r), sigma_k (B v)_k >= 0
// on supp(B r), sigma_j (B v)_j = |(B r)_j|}, j the first index of supp(B r).
// Vertices of this slice are the extreme rays of the face of the conformal
// cone that contains r, i.e. circuits conformal to r.
RatVec conformal_circuit_direction(const Polyhedron& P, const RatVec& image) {
  const std::size_t n = P.dim();
  RatMat A = P.A();
  RatVec b(P.equality_count(), Rat(0));
  RatMat B(0, n);
  RatVec d;
  RatVec objective = zeros(n);
  std::optional<std::size_t> anchor;
  for (std::size_t k = 0; k < image.size(); ++k) {
    const auto row = P.B().row(k);
    const int s = sign(image[k]);
    if (s == 0) {
      A.append_row(row);
      b.emplace_back(0);
      continue;
    }
    RatVec oriented = scaled(row, Rat(s));
    if (!anchor) {
      anchor = k;
      A.append_row(oriented);
      b.push_back(abs(image[k]));
    }
    objective = add(objective, oriented);
    B.append_row(scaled(oriented, Rat(-1)));
    d.emplace_back(0);
  }
  const Polyhedron slice(std::move(A), std::move(b), std::move(B), std::move(d));
  const auto outcome = solve_lp(slice, objective);
  const auto* opt = std::get_if<LpOptimal>(&outcome);
  if (opt == nullptr) throw std::logic_error("decompose: conformal slice has no optimal vertex");
  return opt->vertex;
}

}  // namespace

ConformalSum decompose(const Polyhedron& P, std::span<const Rat> z) {
  if (z.size() != P.dim()) throw std::invalid_argument("decompose: dimension mismatch");
  if (is_zero(z)) throw std::invalid_argument("decompose: zero vector has no conformal decomposition");
  if (!P.in_kernel(z)) throw std::invalid_argument("decompose: vector is not in ker(A)");

  ConformalSum sum;
  sum.target.assign(z.begin(), z.end());
  RatVec residual = sum.target;
  while (!is_zero(residual)) {
    const RatVec image = P.B().multiply(residual);
    const RatVec direction = conformal_circuit_direction(P, image);
    Circuit circuit = make_circuit(P, direction);
    const RatVec circuit_image = P.B().multiply(circuit.g);
    std::optional<Rat> alpha;
    for (std::size_t k = 0; k < image.size(); ++k) {
      if (sgn(circuit_image[k]) == 0) continue;
      Rat ratio = image[k] / circuit_image[k];
      if (!alpha || ratio < *alpha) alpha = std::move(ratio);
    }
    if (!alpha || sgn(*alpha) <= 0) throw std::logic_error("decompose: non-conformal circuit selected");
    residual = subtract(residual, scaled(circuit.g, *alpha));
    sum.terms.push_back({std::move(*alpha), std::move(circuit)});
  }
  std::stable_sort(sum.terms.begin(), sum.terms.end(),
                   [&](const ConformalTerm& lhs, const ConformalTerm& rhs) { return canonical_less(P, lhs.circuit, rhs.circuit); });
  return sum;
}

bool verify_conformal(const Polyhedron& P, const ConformalSum& sum) {
  const std::size_t n = P.dim();
  if (sum.target.size() != n || is_zero(sum.target)) return false;
  if (sum.terms.size() > n - P.rank_A()) return false;
  const RatVec target_image = P.B().multiply(sum.target);
  RatVec total = zeros(n);
  for (const auto& term : sum.terms) {
    if (sgn(term.alpha) <= 0 || term.circuit.g.size() != n) return false;
    if (!is_circuit_direction(P, term.circuit.g)) return false;
    const RatVec image = P.B().multiply(term.circuit.g);
    for (std::size_t k = 0; k < image.size(); ++k) {
      const int s = sign(image[k]);
      if (s != 0 && s != sign(target_image[k])) return false;
    }
    total = add(total, scaled(term.circuit.g, term.alpha));
  }
  return total == sum.target;
}

}  // namespace ddsteps
