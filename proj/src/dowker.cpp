#include "barbridge/dowker.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "barbridge/error.hpp"
#include "barbridge/parallel.hpp"

namespace barbridge {

namespace {

using Endpoints = std::pair<double, double>;

Endpoints endpoints(const PersistenceResult& r, const Bar& b) {
  const ParameterScale& s = r.complex().scale();
  return {s.value(b.birth), s.value(b.death)};
}

std::vector<Endpoints> endpoint_multiset(const PersistenceResult& r) {
  std::vector<Endpoints> out;
  for (const Bar& b : r.bars()) out.push_back(endpoints(r, b));
  std::sort(out.begin(), out.end());
  return out;
}

Chain shift(const Chain& c, std::int64_t offset, const FieldSpec& field) {
  Chain out;
  for (const auto& [s, v] : c.terms()) {
    std::vector<Vertex> vs;
    for (Vertex x : s.vertices()) {
      std::int64_t y = static_cast<std::int64_t>(x) + offset;
      if (y < 0) throw InputError("vertex out of range while moving a chain");
      vs.push_back(static_cast<Vertex>(y));
    }
    out.add(Simplex(std::move(vs)), v, field);
  }
  return out;
}

}  // namespace

DowkerBarcodeCheck dowker_barcode_check(const CrossDissimilarityMatrix& b, int k,
                                        const FieldSpec& field) {
  std::vector<std::shared_ptr<const GradedComplex>> sides(2);
  parallel_for(2, [&](std::size_t i) {
    sides[i] = std::make_shared<const GradedComplex>(
        witness_complex(i == 0 ? b : b.transposed(), k + 1));
  });
  DowkerBarcodeCheck out{compute_persistence(sides[0], k, field),
                         compute_persistence(sides[1], k, field), false};
  out.equal = endpoint_multiset(out.landmark_side) == endpoint_multiset(out.witness_side);
  return out;
}

std::vector<std::pair<BarId, BarId>> dowker_bar_correspondence(const PersistenceResult& p_side,
                                                               const PersistenceResult& q_side) {
  auto index = [](const PersistenceResult& r, const char* name) {
    std::map<Endpoints, BarId> m;
    for (const Bar& b : r.bars()) {
      auto [it, inserted] = m.emplace(endpoints(r, b), b.id);
      if (!inserted)
        throw AssumptionViolation(std::string("ambiguous correspondence: bars #") +
                                  std::to_string(it->second) + " and #" + std::to_string(b.id) +
                                  " of the " + name + " barcode share their endpoints");
    }
    return m;
  };
  auto p = index(p_side, "landmark");
  auto q = index(q_side, "witness");
  if (p.size() != q.size()) throw InputError("the two witness barcodes differ in size");
  std::vector<std::pair<BarId, BarId>> out;
  for (const auto& [ends, id] : p) {
    auto it = q.find(ends);
    if (it == q.end())
      throw InputError("bar #" + std::to_string(id) + " has no partner with equal endpoints");
    out.emplace_back(id, it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Chain landmark_to_cross(const Chain& z, std::size_t) {
  return z;
}

Chain witness_to_cross(const Chain& y, std::size_t landmarks) {
  // Stored coefficients are already reduced below any admissible prime.
  return shift(y, static_cast<std::int64_t>(landmarks), FieldSpec(65521));
}

namespace {

void validate_landmark_cycle(const CrossDissimilarityMatrix& b, double eps, const Chain& z, int k,
                             const FieldSpec& field) {
  const std::size_t n = b.rows();
  if (auto d = z.dim(); d && *d != k)
    throw InputError("cycle has dimension " + std::to_string(*d) + ", expected " +
                     std::to_string(k));
  for (const auto& [s, v] : z.terms()) {
    if (s.vertices().back() >= n)
      throw InputError("simplex " + s.to_string() + " uses a landmark beyond " +
                       std::to_string(n));
    bool witnessed = false;
    for (std::size_t q = 0; q < b.cols() && !witnessed; ++q) {
      witnessed = true;
      for (Vertex p : s.vertices()) witnessed = witnessed && b.at(p, q) <= eps;
    }
    if (!witnessed) throw InputError("simplex " + s.to_string() + " is not witnessed at eps");
  }
  if (!is_cycle(z, field)) throw InputError("chain is not a cycle");
}

}  // namespace

std::vector<DowkerDualResult> dowker_dual_cycles(const CrossDissimilarityMatrix& b, double eps,
                                                 const std::vector<Chain>& zs, int k,
                                                 const FieldSpec& field) {
  const std::size_t n = b.rows();
  for (const Chain& z : zs) validate_landmark_cycle(b, eps, z, k, field);
  if (zs.empty()) return {};

  CrossComplex cc = cross_complex_at(b, eps, k + 1);
  const GradedComplex& x = cc.complex;
  auto ks = x.simplices(k);
  auto k1s = x.simplices(k + 1);

  // Columns: boundaries of the (k+1)-simplices, then one unit column per
  // k-simplex on witnesses only.
  std::vector<SparseVector> cols;
  for (const GradedSimplex& gs : k1s) {
    std::vector<Entry> e;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(k + 1); ++i)
      e.push_back({static_cast<Index>(*x.position_of(gs.simplex.facet(i))),
                   (i % 2 == 0) ? 1u : field.neg(1)});
    cols.push_back(SparseVector::from_entries(std::move(e), field));
  }
  std::vector<std::size_t> pure_q;
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (cc.is_witness(ks[i].simplex[0])) {
      pure_q.push_back(i);
      cols.push_back(SparseVector::unit(static_cast<Index>(i)));
    }
  const Reduction reduction =
      reduce_with_basis(SparseMatrix(static_cast<Index>(ks.size()), std::move(cols)), field);

  std::vector<DowkerDualResult> out(zs.size());
  parallel_for(zs.size(), [&](std::size_t j) {
    const Chain& z = zs[j];
    std::vector<Entry> rhs;
    for (const auto& [s, v] : z.terms()) {
      auto pos = x.position_of(s);
      if (!pos) throw Error("simplex " + s.to_string() + " missing from the cross complex");
      rhs.push_back({static_cast<Index>(*pos), v});
    }
    auto solution =
        solve_particular(reduction, SparseVector::from_entries(std::move(rhs), field), field);
    if (!solution)
      throw Error("no dual cycle at eps = " + std::to_string(eps) + "; increase max_dim");

    DowkerDualResult& r = out[j];
    r.eps = eps;
    r.input = z;
    Chain y_cross;
    for (const Entry& e : solution->entries()) {
      if (e.index < k1s.size())
        r.certificate.add(k1s[e.index].simplex, e.value, field);
      else
        y_cross.add(ks[pure_q[e.index - k1s.size()]].simplex, e.value, field);
    }
    r.dual = shift(y_cross, -static_cast<std::int64_t>(n), field);
    if (!verify_dual(r, n, field)) throw Error("dual certificate failed to verify");
  });
  return out;
}

DowkerDualResult dowker_dual_cycle(const CrossDissimilarityMatrix& b, double eps, const Chain& z,
                                   int k, const FieldSpec& field) {
  return std::move(dowker_dual_cycles(b, eps, {z}, k, field).front());
}

bool verify_dual(const DowkerDualResult& r, std::size_t landmarks, const FieldSpec& field) {
  return boundary(r.certificate, field) ==
         subtract(landmark_to_cross(r.input, landmarks), witness_to_cross(r.dual, landmarks),
                  field);
}

}  // namespace barbridge
