#include "cmbal/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "cmbal/errors.hpp"
#include "cmbal/exact_linalg.hpp"

namespace cmbal {

std::size_t boundary_rank(const SimplicialComplex& complex, int i) {
  if (i < 0 || i > complex.dimension()) throw InputError("boundary index out of range");
  const auto& rows = complex.faces_of_dimension(i);
  const auto& cols = complex.faces_of_dimension(i - 1);
  std::unordered_map<VertexSet, std::size_t> column_of;
  column_of.reserve(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) column_of.emplace(cols[c], c);

  SparseEchelon echelon(cols.size());
  for (VertexSet face : rows) {
    SparseRow row;
    int position = 0;
    face.for_each([&](int v) {
      VertexSet facet = face;
      facet.erase(v);
      row.emplace_back(column_of.at(facet), position % 2 == 0 ? 1 : -1);
      ++position;
    });
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    echelon.insert(std::move(row));
    if (echelon.rank() == cols.size()) break;
  }
  return echelon.rank();
}

BettiProfile reduced_betti(const SimplicialComplex& complex) {
  const int dim = complex.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 2), 0);  // ranks[i] = rank ∂_i, ∂_{dim+1} = 0
  for (int i = 0; i <= dim; ++i) ranks[static_cast<std::size_t>(i)] = boundary_rank(complex, i);

  BettiProfile out;
  std::int64_t euler_betti = 0;
  std::int64_t euler_faces = 0;
  for (int i = -1; i <= dim; ++i) {
    const auto chains = static_cast<std::int64_t>(complex.faces_of_dimension(i).size());
    const auto in_rank = i >= 0 ? static_cast<std::int64_t>(ranks[static_cast<std::size_t>(i)]) : 0;
    const auto out_rank = static_cast<std::int64_t>(ranks[static_cast<std::size_t>(i + 1)]);
    const std::int64_t b = chains - in_rank - out_rank;
    if (b < 0) throw VerificationError("negative Betti number");
    out.reduced.push_back(b);
    const int sign = i % 2 == 0 ? 1 : -1;
    euler_betti += sign * b;
    if (i >= 0) euler_faces += sign * chains;
  }
  if (euler_betti != euler_faces - 1) throw VerificationError("Euler–Poincaré relation fails");
  return out;
}

CmResult is_cohen_macaulay(const SimplicialComplex& complex) {
  CmResult result;
  result.pure = is_pure(complex);
  result.betti = reduced_betti(complex);
  const int dim = complex.dimension();
  for (int k = -1; k <= dim && !result.violation; ++k) {
    for (VertexSet tau : complex.faces_of_dimension(k)) {
      const int link_dim = dim - k - 1;
      if (link_dim <= 0 && result.pure) continue;
      const SimplicialComplex lk = k < 0 ? complex : link(complex, tau);
      if (lk.dimension() <= 0) continue;
      const BettiProfile b = k < 0 ? result.betti : reduced_betti(lk);
      for (int i = -1; i < lk.dimension(); ++i) {
        if (b.at(i) != 0) {
          result.violation = HomologyViolation{tau, complex.labels_of(tau), i, lk.dimension()};
          break;
        }
      }
      if (result.violation) break;
    }
  }
  result.cohen_macaulay = !result.violation.has_value();
  if (result.cohen_macaulay && !result.pure) throw VerificationError("Cohen–Macaulay complex is not pure");
  return result;
}

}  // namespace cmbal
