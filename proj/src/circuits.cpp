#include "ddsteps/circuits.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace ddsteps {

namespace {

std::vector<int> sign_pattern(const Polyhedron& P, std::span<const Rat> g) {
  std::vector<int> signs(P.inequality_count());
  for (std::size_t j = 0; j < signs.size(); ++j) signs[j] = sign(dot(P.B().row(j), g));
  return signs;
}

// Orientation with the first nonzero entry of B g positive. Pointedness
// guarantees B g != 0 for g in ker(A) \ {0}; the fallback on g itself only
// matters for non-pointed systems.
RatVec canonical_orientation(const Polyhedron& P, std::span<const Rat> g) {
  RatVec out = primitive_integer(g);
  int lead = 0;
  for (std::size_t j = 0; j < P.inequality_count() && lead == 0; ++j) lead = sign(dot(P.B().row(j), out));
  for (std::size_t j = 0; j < out.size() && lead == 0; ++j) lead = sign(out[j]);
  if (lead < 0) {
    for (auto& v : out) v = -v;
  }
  return out;
}

// Saturating binomial coefficient.
std::size_t choose_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    std::size_t product = 0;
    if (__builtin_mul_overflow(acc, n - k + i, &product)) return cap + 1;
    acc = product / i;
    if (acc > cap) return cap + 1;
  }
  return acc;
}

}  // namespace

Circuit make_circuit(const Polyhedron& P, std::span<const Rat> direction) {
  Circuit c;
  c.g = primitive_integer(direction);
  c.b_signs = sign_pattern(P, c.g);
  return c;
}

Circuit canonical(const Polyhedron& P, const Circuit& circuit) {
  Circuit c;
  c.g = canonical_orientation(P, circuit.g);
  c.b_signs = sign_pattern(P, c.g);
  return c;
}

bool canonical_less(const Polyhedron& P, const Circuit& lhs, const Circuit& rhs) {
  return canonical_orientation(P, lhs.g) < canonical_orientation(P, rhs.g);
}

bool ConeLift::is_zero() const { return ddsteps::is_zero(x) && ddsteps::is_zero(yplus) && ddsteps::is_zero(yminus); }

ConeLift lift(const Polyhedron& P, std::span<const Rat> v) {
  if (!P.in_kernel(v)) throw std::invalid_argument("lift: vector is not in ker(A)");
  ConeLift out{RatVec(v.begin(), v.end()), zeros(P.inequality_count()), zeros(P.inequality_count())};
  const RatVec image = P.B().multiply(v);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (sgn(image[i]) > 0) out.yplus[i] = image[i];
    if (sgn(image[i]) < 0) out.yminus[i] = -image[i];
  }
  return out;
}

bool is_extreme_ray(const Polyhedron& P, const ConeLift& point) {
  const std::size_t n = P.dim();
  const std::size_t mB = P.inequality_count();
  if (point.x.size() != n || point.yplus.size() != mB || point.yminus.size() != mB) {
    throw std::invalid_argument("is_extreme_ray: lift has wrong dimensions");
  }
  if (point.is_zero()) throw std::invalid_argument("is_extreme_ray: zero vector is not a ray");
  if (!P.in_kernel(point.x)) throw std::invalid_argument("is_extreme_ray: point is outside the cone (A x != 0)");
  const RatVec image = P.B().multiply(point.x);
  for (std::size_t i = 0; i < mB; ++i) {
    if (sgn(point.yplus[i]) < 0 || sgn(point.yminus[i]) < 0 || image[i] != point.yplus[i] - point.yminus[i]) {
      throw std::invalid_argument("is_extreme_ray: point is outside the cone");
    }
  }

  const std::size_t width = n + 2 * mB;
  RatMat active(0, width);
  RatVec row(width);
  for (std::size_t i = 0; i < P.equality_count(); ++i) {
    std::fill(row.begin(), row.end(), Rat(0));
    std::copy(P.A().row(i).begin(), P.A().row(i).end(), row.begin());
    active.append_row(row);
  }
  for (std::size_t i = 0; i < mB; ++i) {
    std::fill(row.begin(), row.end(), Rat(0));
    std::copy(P.B().row(i).begin(), P.B().row(i).end(), row.begin());
    row[n + i] = -1;
    row[n + mB + i] = 1;
    active.append_row(row);
  }
  for (std::size_t i = 0; i < mB; ++i) {
    for (std::size_t block : {std::size_t{0}, std::size_t{1}}) {
      const Rat& value = block == 0 ? point.yplus[i] : point.yminus[i];
      if (sgn(value) != 0) continue;
      std::fill(row.begin(), row.end(), Rat(0));
      row[n + block * mB + i] = 1;
      active.append_row(row);
    }
  }
  return rank(active) + 1 == width;
}

bool is_circuit_direction(const Polyhedron& P, std::span<const Rat> v) {
  if (v.size() != P.dim() || is_zero(v) || !P.in_kernel(v)) return false;
  return is_extreme_ray(P, lift(P, v));
}

WorkBudget WorkBudget::from_environment() {
  WorkBudget budget;
  if (const char* env = std::getenv("DDSTEPS_WORK_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) budget.max_subsets = static_cast<std::size_t>(value);
  }
  return budget;
}

std::vector<Circuit> enumerate_circuits(const Polyhedron& P, const WorkBudget& budget) {
  if (!P.is_pointed()) throw std::invalid_argument("enumerate_circuits: polyhedron is not pointed");
  const std::size_t n = P.dim();

  // Work in coordinates of ker(A): g = K t, so B g = (B K) t. A nonzero g is
  // a circuit iff the rows of B K vanishing on t have rank r - 1, and every
  // such row set contains an independent subset of exactly r - 1 rows.
  const auto kernel = kernel_basis(P.A());
  const std::size_t r = kernel.size();
  if (r == 0) return {};
  RatMat K(n, r);
  for (std::size_t q = 0; q < r; ++q)
    for (std::size_t i = 0; i < n; ++i) K(i, q) = kernel[q][i];
  const RatMat projected = P.B().multiply(K);

  // Parallel rows have identical zero sets; keep one of each.
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < projected.rows(); ++i) {
    if (is_zero(projected.row(i))) continue;
    RatVec dir = canonical_direction(projected.row(i));
    if (std::find(rows.begin(), rows.end(), dir) == rows.end()) rows.push_back(std::move(dir));
  }

  const std::size_t pick = r - 1;
  const std::size_t work = choose_capped(rows.size(), pick, budget.max_subsets);
  if (work > budget.max_subsets) {
    throw SizeGuardError("enumerate_circuits: " + std::to_string(rows.size()) + " distinct constraint directions in a " + std::to_string(r) +
                             "-dimensional kernel exceed the work budget of " + std::to_string(budget.max_subsets) + " subsets",
                         work, budget.max_subsets);
  }

  if (pick > rows.size()) return {};
  std::set<RatVec> found;
  std::vector<std::size_t> subset(pick);
  for (std::size_t i = 0; i < pick; ++i) subset[i] = i;
  for (;;) {
    RatMat system(0, r);
    for (auto idx : subset) system.append_row(rows[idx]);
    const auto null = kernel_basis(system);
    if (null.size() == 1) {
      const RatVec g = K.multiply(null.front());
      found.insert(canonical_orientation(P, g));
    }
    // next combination in lexicographic order
    std::size_t pos = pick;
    while (pos > 0 && subset[pos - 1] == rows.size() - pick + pos - 1) --pos;
    if (pos == 0) break;
    ++subset[pos - 1];
    for (std::size_t i = pos; i < pick; ++i) subset[i] = subset[i - 1] + 1;
  }

  std::vector<Circuit> circuits;
  circuits.reserve(found.size());
  for (const auto& g : found) circuits.push_back(Circuit{g, sign_pattern(P, g)});
  return circuits;
}

}  // namespace ddsteps
