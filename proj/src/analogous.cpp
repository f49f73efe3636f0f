#include "barbridge/analogous.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "barbridge/error.hpp"
#include "barbridge/parallel.hpp"

namespace barbridge {

AnalogousInputs prepare_analogous(const DissimilarityMatrix& m_q, const DissimilarityMatrix& m_p,
                                  const CrossDissimilarityMatrix& m_qp, int k,
                                  const FieldSpec& field) {
  if (k < 0) throw InputError("degree must be non-negative");
  if (m_qp.rows() != m_q.size() || m_qp.cols() != m_p.size())
    throw InputError("cross matrix is " + std::to_string(m_qp.rows()) + "x" +
                     std::to_string(m_qp.cols()) + ", expected " + std::to_string(m_q.size()) +
                     "x" + std::to_string(m_p.size()));
  AnalogousInputs in;
  in.cross = m_qp;
  in.k = k;
  in.field = field;
  std::vector<std::shared_ptr<const PersistenceResult>> results(4);
  parallel_for(4, [&](std::size_t i) {
    GradedComplex c;
    switch (i) {
      case 0: c = clique_complex(m_q, k + 1); break;
      case 1: c = witness_complex(m_qp, k + 1); break;
      case 2: c = witness_complex(m_qp.transposed(), k + 1); break;
      default: c = clique_complex(m_p, k + 1); break;
    }
    results[i] = std::make_shared<const PersistenceResult>(
        compute_persistence(std::make_shared<const GradedComplex>(std::move(c)), k, field));
  });
  in.clique_q = results[0];
  in.witness_qp = results[1];
  in.witness_pq = results[2];
  in.clique_p = results[3];
  return in;
}

namespace {

ExtensionOptions extension_options(const AnalogousOptions& o) {
  return ExtensionOptions{o.extension_mode, o.psi, o.cap};
}

void fill_diagnostics(const BarExtensionResult& source, AnalogousDiagnostics& d) {
  if (source.per_class.empty()) return;
  const ExtensionResult& first = source.per_class.front();
  d.l0 = first.l0;
  for (const Bar& b : first.aux->bars()) d.aux_barcode.emplace_back(b.birth, b.death);
}

bool has_nonzero_extension(const BarExtensionResult& r) {
  for (const ExtensionResult& e : r.per_class)
    for (const BarExtensionSet& s : e.bar_extensions) {
      if (!s.baseline.empty()) return true;
      for (const BarRepresentation& o : s.offsets)
        if (!o.empty()) return true;
    }
  return false;
}

struct DualKey {
  Grade psi;
  BarRepresentation rep;
  bool operator<(const DualKey& o) const {
    if (psi != o.psi) return psi < o.psi;
    if (rep.terms.size() != o.rep.terms.size()) return rep.terms.size() < o.rep.terms.size();
    for (std::size_t i = 0; i < rep.terms.size(); ++i) {
      const BarTerm& a = rep.terms[i];
      const BarTerm& b = o.rep.terms[i];
      if (a.bar != b.bar) return a.bar < b.bar;
      if (a.coefficient != b.coefficient) return a.coefficient < b.coefficient;
    }
    return false;
  }
};

}  // namespace

AnalogousBarsResult feature_centric(const AnalogousInputs& in, BarId tau,
                                    const AnalogousOptions& options) {
  if (options.member_cap == 0) throw InputError("member cap must be at least 1");
  const FieldSpec& field = in.field;
  const PersistenceResult& wpq = *in.witness_pq;
  AnalogousBarsResult out;
  out.mode = AnalogousMode::feature;
  out.selected = tau;
  out.source = bar_to_bars(*in.clique_q, *in.witness_qp, tau, extension_options(options));
  out.truncated = out.source.truncated;
  fill_diagnostics(out.source, out.diagnostics);

  // Members of every extension set, kept when their class survives in W_{Q,P}.
  struct Member {
    std::size_t terminal_index;
    Grade at;
    std::vector<Scalar> coefficients;
    Chain chain;
    Grade terminal;  // class death - 1 in W_{Q,P}
  };
  const PersistenceResult& wqp = *in.witness_qp;
  const Grade n_grades = wqp.complex().scale().size();
  std::vector<Member> members;
  for (std::size_t c = 0; c < out.source.per_class.size(); ++c) {
    for (const CycleExtensionSet& set : out.source.per_class[c].extensions) {
      AffineEnumerator<Chain> it(set.baseline, set.offsets, field, options.member_cap);
      while (auto chain = it.next()) {
        BarRepresentation rep = wqp.bar_representation(*chain, set.at);
        if (rep.empty()) continue;
        const Grade death = class_birth_death(wqp, rep).second;
        members.push_back({c, set.at, it.last_coefficients(), std::move(*chain),
                           death == wqp.infinity() ? n_grades : death - 1});
      }
      out.truncated = out.truncated || it.truncated();
    }
  }

  // Duality at each member's terminal parameter, one reduction per grade.
  std::map<Grade, std::vector<std::size_t>> by_terminal;
  for (std::size_t i = 0; i < members.size(); ++i) by_terminal[members[i].terminal].push_back(i);
  std::vector<DowkerDualResult> duals(members.size());
  for (const auto& [g, ids] : by_terminal) {
    std::vector<Chain> chains;
    for (std::size_t i : ids) chains.push_back(members[i].chain);
    auto solved = dowker_dual_cycles(in.cross, wqp.complex().scale().value(g), chains, in.k, field);
    for (std::size_t j = 0; j < ids.size(); ++j) duals[ids[j]] = std::move(solved[j]);
  }

  std::map<DualKey, std::size_t> seen;
  std::vector<Grade> psis;
  for (std::size_t i = 0; i < members.size(); ++i) {
    Member& m = members[i];
    BarRepresentation cls = wpq.bar_representation(duals[i].dual, m.terminal);
    if (cls.empty()) continue;
    const Grade death = class_birth_death(wpq, cls).second;
    const Grade psi = death == wpq.infinity() ? wpq.complex().scale().size() : death - 1;
    DualKey key{psi, wpq.bar_representation(duals[i].dual, psi)};
    if (!seen.emplace(std::move(key), out.duals.size()).second) continue;
    FeatureDual f;
    f.terminal_index = m.terminal_index;
    f.at = m.at;
    f.member = std::move(m.coefficients);
    f.dual_at = m.terminal;
    f.dual = std::move(duals[i]);
    f.witness_class = std::move(cls);
    out.duals.push_back(std::move(f));
    psis.push_back(psi);
  }

  parallel_for(out.duals.size(), [&](std::size_t i) {
    out.duals[i].extension = cycle_to_bar(wpq.complex(), *in.clique_p, psis[i], out.duals[i].dual.dual);
  });

  if (out.duals.empty()) {
    out.empty = true;
    out.diagnostics.message =
        "no nonzero extension of the selected bar survives into the witness complexes";
  }
  return out;
}

AnalogousBarsResult similarity_centric(const AnalogousInputs& in, BarId tau,
                                       const AnalogousOptions& options) {
  AnalogousBarsResult out;
  out.mode = AnalogousMode::similarity;
  out.selected = tau;
  in.witness_qp->bar(tau);
  for (auto [q, p] : dowker_bar_correspondence(*in.witness_qp, *in.witness_pq))
    if (q == tau) out.partner = p;
  if (!out.partner) throw InputError("bar #" + std::to_string(tau) + " has no Dowker partner");

  ExtensionOptions source_opts = extension_options(options);
  ExtensionOptions target_opts = source_opts;
  target_opts.psi.reset();
  out.source = bar_to_bars(*in.witness_qp, *in.clique_q, tau, source_opts);
  out.target = bar_to_bars(*in.witness_pq, *in.clique_p, *out.partner, target_opts);
  out.truncated = out.source.truncated || out.target->truncated;
  fill_diagnostics(out.source, out.diagnostics);
  if (!has_nonzero_extension(out.source) || !has_nonzero_extension(*out.target)) {
    out.empty = true;
    out.diagnostics.message = "the witness bar has no nonzero extension on at least one side";
  }
  return out;
}

namespace {

std::vector<BarId> first_baseline_bars(const ExtensionResult& e) {
  std::vector<BarId> out;
  if (e.bar_extensions.empty()) return out;
  for (const BarTerm& t : e.bar_extensions.front().baseline.terms) out.push_back(t.bar);
  return out;
}

}  // namespace

AnalogousPair baseline_pair(const AnalogousBarsResult& result) {
  AnalogousPair out;
  if (result.mode == AnalogousMode::similarity) {
    if (!result.source.per_class.empty())
      out.q_side = first_baseline_bars(result.source.per_class.front());
    if (result.target && !result.target->per_class.empty())
      out.p_side = first_baseline_bars(result.target->per_class.front());
    return out;
  }
  out.q_side = {result.selected};
  if (result.source.per_class.empty()) return out;
  const Grade first = result.source.per_class.front().l0;
  for (const FeatureDual& d : result.duals)
    if (d.terminal_index == 0 && d.at == first &&
        std::all_of(d.member.begin(), d.member.end(), [](Scalar c) { return c == 0; })) {
      out.p_side = first_baseline_bars(d.extension);
      break;
    }
  return out;
}

}  // namespace barbridge
