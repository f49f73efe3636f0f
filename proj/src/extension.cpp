#include "barbridge/extension.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "barbridge/error.hpp"
#include "barbridge/parallel.hpp"

namespace barbridge {

std::shared_ptr<const PersistenceResult> auxiliary_persistence(const GradedComplex& z, Grade psi,
                                                               const GradedComplex& y, int k,
                                                               const FieldSpec& field) {
  auto aux = std::make_shared<const GradedComplex>(intersection_filtration(z, psi, y));
  return std::make_shared<const PersistenceResult>(compute_persistence(aux, k, field));
}

ExtensionResult cycle_to_cycles(const GradedComplex& z, const GradedComplex& y, Grade psi,
                                const Chain& tau, int k, const FieldSpec& field) {
  return cycle_to_cycles(auxiliary_persistence(z, psi, y, k, field), psi, tau);
}

ExtensionResult cycle_to_cycles(std::shared_ptr<const PersistenceResult> aux, Grade psi,
                                const Chain& tau) {
  const PersistenceResult& a = *aux;
  const Grade n = a.complex().scale().size();
  const Grade inf = a.infinity();
  for (const auto& [s, v] : tau.terms())
    if (!a.complex().grade_of(s))
      throw InputError("simplex " + s.to_string() + " of the cycle is not in Z^psi");

  ExtensionResult out;
  out.psi = psi;
  out.source = tau;
  out.aux = aux;
  out.source_in_aux = a.bar_representation(tau, n);
  if (out.source_in_aux.empty()) throw TrivialClassError("the class is zero in Z^psi");

  Grade l0 = 0;
  for (const BarTerm& t : out.source_in_aux.terms) l0 = std::max(l0, a.bar(t.bar).birth);
  out.l0 = l0;

  out.p_y.push_back(l0);
  for (const Bar& b : a.bars())
    if (l0 < b.birth && b.death < inf) out.p_y.push_back(b.birth);
  std::sort(out.p_y.begin(), out.p_y.end());
  out.p_y.erase(std::unique(out.p_y.begin(), out.p_y.end()), out.p_y.end());

  std::vector<BarId> short_bars;
  for (const Bar& b : a.bars())
    if (l0 < b.death && b.death < inf) short_bars.push_back(b.id);

  Chain baseline = a.chain_of(out.source_in_aux);
  out.restrictions.resize(out.p_y.size());
  out.extensions.resize(out.p_y.size());
  parallel_for(out.p_y.size(), [&](std::size_t i) {
    const Grade l = out.p_y[i];
    RestrictionSet r;
    r.at = l;
    r.baseline = baseline;
    for (BarId id : short_bars)
      if (a.bar(id).alive_at(l)) {
        r.offsets.push_back(a.representative(id));
        r.offset_bars.push_back(id);
      }
    out.extensions[i] = CycleExtensionSet{l, r.baseline, r.offsets};
    out.restrictions[i] = std::move(r);
  });
  return out;
}

void attach_bar_extensions(ExtensionResult& result, const PersistenceResult& y) {
  result.bar_extensions.assign(result.extensions.size(), {});
  parallel_for(result.extensions.size(), [&](std::size_t i) {
    const CycleExtensionSet& e = result.extensions[i];
    BarExtensionSet b;
    b.at = e.at;
    b.baseline = y.bar_representation(e.baseline, e.at);
    for (const Chain& off : e.offsets) b.offsets.push_back(y.bar_representation(off, e.at));
    result.bar_extensions[i] = std::move(b);
  });
}

ExtensionResult cycle_to_bar(const GradedComplex& z, const PersistenceResult& y, Grade psi,
                             const Chain& tau) {
  ExtensionResult out = cycle_to_cycles(z, y.complex(), psi, tau, y.degree(), y.field());
  attach_bar_extensions(out, y);
  return out;
}

ExtensionMode resolve_mode(const PersistenceResult& z, ExtensionMode requested) {
  std::map<Grade, std::vector<BarId>> by_death;
  for (const Bar& b : z.bars()) by_death[b.death].push_back(b.id);
  std::string clashes;
  for (const auto& [death, ids] : by_death)
    if (ids.size() > 1) {
      clashes += clashes.empty() ? " death " : "; death ";
      clashes += std::to_string(death) + ": bars";
      for (BarId id : ids) clashes += " #" + std::to_string(id);
    }
  const bool f2_ok = z.field().is_gf2() && clashes.empty();
  switch (requested) {
    case ExtensionMode::automatic:
      return f2_ok ? ExtensionMode::f2_unique_deaths : ExtensionMode::general;
    case ExtensionMode::general:
      return ExtensionMode::general;
    case ExtensionMode::f2_unique_deaths:
      if (!z.field().is_gf2())
        throw AssumptionViolation("f2_unique_deaths mode needs GF(2), field is GF(" +
                                  std::to_string(z.field().characteristic()) + ")");
      if (!clashes.empty())
        throw AssumptionViolation("f2_unique_deaths mode needs unique death grades;" + clashes);
      return ExtensionMode::f2_unique_deaths;
  }
  return ExtensionMode::general;
}

namespace {

BarExtensionResult extend_bar(const PersistenceResult& z, const GradedComplex& y, BarId bar,
                              const ExtensionOptions& options) {
  BarExtensionResult out;
  out.bar = bar;
  out.mode = resolve_mode(z, options.mode);
  const Bar& tau = z.bar(bar);
  out.psi = options.psi ? *options.psi : terminal_class(z, bar).psi;
  if (!tau.alive_at(out.psi))
    throw InputError("bar #" + std::to_string(bar) + " is not alive at psi = " +
                     std::to_string(out.psi));
  if (out.mode == ExtensionMode::general) {
    out.terminal = alternate_terminal_classes(z, bar, out.psi, options.cap);
  } else {
    out.terminal.psi = out.psi;
    out.terminal.classes.push_back(z.representative(bar));
    out.terminal.representations.push_back(BarRepresentation{out.psi, {{1, bar}}});
  }
  out.truncated = out.terminal.truncated;

  auto aux = auxiliary_persistence(z.complex(), out.psi, y, z.degree(), z.field());
  out.per_class.resize(out.terminal.classes.size());
  parallel_for(out.per_class.size(), [&](std::size_t i) {
    out.per_class[i] = cycle_to_cycles(aux, out.psi, out.terminal.classes[i]);
  });
  return out;
}

}  // namespace

BarExtensionResult bar_to_bars(const PersistenceResult& z, const PersistenceResult& y, BarId bar,
                               const ExtensionOptions& options) {
  if (z.degree() != y.degree() || !(z.field() == y.field()))
    throw InputError("Z and Y results use different degrees or fields");
  BarExtensionResult out = extend_bar(z, y.complex(), bar, options);
  for (ExtensionResult& r : out.per_class) attach_bar_extensions(r, y);
  return out;
}

BarExtensionResult bar_to_cycle(const PersistenceResult& z, const GradedComplex& y, BarId bar,
                                const ExtensionOptions& options) {
  return extend_bar(z, y, bar, options);
}

Chain combine(const Chain& baseline, const std::vector<Chain>& offsets,
              const std::vector<Scalar>& coefficients, const FieldSpec& field) {
  Chain out = baseline;
  for (std::size_t i = 0; i < offsets.size(); ++i) out.axpy(coefficients[i], offsets[i], field);
  return out;
}

BarRepresentation combine(const BarRepresentation& baseline,
                          const std::vector<BarRepresentation>& offsets,
                          const std::vector<Scalar>& coefficients, const FieldSpec& field) {
  std::map<BarId, Scalar> acc;
  auto add = [&](const BarRepresentation& r, Scalar c) {
    for (const BarTerm& t : r.terms) acc[t.bar] = field.add(acc[t.bar], field.mul(c, t.coefficient));
  };
  add(baseline, 1);
  for (std::size_t i = 0; i < offsets.size(); ++i)
    if (coefficients[i]) add(offsets[i], coefficients[i]);
  BarRepresentation out{baseline.at, {}};
  for (const auto& [bar, c] : acc)
    if (c) out.terms.push_back({c, bar});
  return out;
}

}  // namespace barbridge
