#include "document.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>

namespace barbridge::cli {

namespace {

void dump(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        dump(it.value(), indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(j[i], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump(j[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

Json value_or_null(const ParameterScale& s, Grade g) {
  if (g >= 1 && g <= s.size()) return s.value(g);
  return nullptr;
}

}  // namespace

std::string canonical_json(const Json& j) {
  std::string out;
  dump(j, 0, out);
  out += "\n";
  return out;
}

std::string digest(std::size_t rows, std::size_t cols, const std::vector<double>& entries) {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed(std::to_string(rows) + "x" + std::to_string(cols) + ";");
  char buf[40];
  for (double v : entries) {
    std::snprintf(buf, sizeof buf, "%.17g,", v);
    feed(buf);
  }
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::vector<BarId> ranked_bars(const PersistenceResult& r) {
  const ParameterScale& s = r.complex().scale();
  auto length = [&](const Bar& b) {
    if (b.death == r.infinity()) return std::numeric_limits<double>::infinity();
    return s.value(b.death) - s.value(b.birth);
  };
  std::vector<BarId> ids;
  for (const Bar& b : r.bars()) ids.push_back(b.id);
  std::stable_sort(ids.begin(), ids.end(), [&](BarId a, BarId b) {
    const double la = length(r.bar(a)), lb = length(r.bar(b));
    if (la != lb) return la > lb;
    return r.bar(a).birth < r.bar(b).birth;
  });
  return ids;
}

Json chain_json(const Chain& c) {
  Json out = Json::array();
  for (const auto& [s, v] : c.terms())
    out.push_back({{"simplex", s.vertices()}, {"coefficient", v}});
  return out;
}

Json representation_json(const BarRepresentation& rep) {
  Json out = Json::array();
  for (const BarTerm& t : rep.terms) out.push_back({{"bar", t.bar}, {"coefficient", t.coefficient}});
  return out;
}

Json barcode_json(const PersistenceResult& r, bool with_cycles) {
  const ParameterScale& s = r.complex().scale();
  const auto ranks = ranked_bars(r);
  std::vector<std::size_t> rank_of(r.bars().size());
  for (std::size_t i = 0; i < ranks.size(); ++i) rank_of[ranks[i]] = i;
  Json bars = Json::array();
  for (const Bar& b : r.bars()) {
    Json j = {{"id", b.id},
              {"rank", rank_of[b.id]},
              {"birth", s.value(b.birth)},
              {"death", value_or_null(s, b.death)},
              {"birth_grade", b.birth},
              {"death_grade", b.death == r.infinity() ? Json(nullptr) : Json(b.death)}};
    if (with_cycles) j["representative"] = chain_json(r.representative(b.id));
    bars.push_back(std::move(j));
  }
  return {{"degree", r.degree()},
          {"field", r.field().characteristic()},
          {"grades", s.size()},
          {"bars", std::move(bars)}};
}

Json extension_json(const ExtensionResult& e, const ParameterScale& target) {
  Json sets = Json::array();
  for (std::size_t i = 0; i < e.p_y.size(); ++i) {
    const CycleExtensionSet& c = e.extensions[i];
    Json offsets = Json::array();
    for (std::size_t j = 0; j < c.offsets.size(); ++j) {
      Json o = {{"cycle", chain_json(c.offsets[j])},
                {"aux_bar", e.restrictions[i].offset_bars[j]}};
      if (!e.bar_extensions.empty()) o["bars"] = representation_json(e.bar_extensions[i].offsets[j]);
      offsets.push_back(std::move(o));
    }
    Json baseline = {{"cycle", chain_json(c.baseline)}};
    if (!e.bar_extensions.empty()) baseline["bars"] = representation_json(e.bar_extensions[i].baseline);
    sets.push_back({{"grade", c.at},
                    {"value", value_or_null(target, c.at)},
                    {"baseline", std::move(baseline)},
                    {"offsets", std::move(offsets)}});
  }
  Json aux = Json::array();
  for (const Bar& b : e.aux->bars())
    aux.push_back({b.birth, b.death == e.aux->infinity() ? Json(nullptr) : Json(b.death)});
  return {{"psi", e.psi},
          {"source", chain_json(e.source)},
          {"l0", e.l0},
          {"l0_value", value_or_null(target, e.l0)},
          {"p_y", e.p_y},
          {"aux_barcode", std::move(aux)},
          {"source_in_aux", representation_json(e.source_in_aux)},
          {"sets", std::move(sets)}};
}

Json bar_extension_json(const BarExtensionResult& e, const PersistenceResult& source,
                        const ParameterScale& target) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < e.per_class.size(); ++i)
    classes.push_back({{"representation", representation_json(e.terminal.representations[i])},
                       {"extension", extension_json(e.per_class[i], target)}});
  return {{"bar", e.bar},
          {"psi", e.psi},
          {"psi_value", value_or_null(source.complex().scale(), e.psi)},
          {"mode", e.mode == ExtensionMode::f2_unique_deaths ? "f2_unique_deaths" : "general"},
          {"truncated", e.truncated},
          {"terminal_classes", std::move(classes)}};
}

Json analogous_json(const AnalogousBarsResult& r, const AnalogousInputs& in) {
  const bool feature = r.mode == AnalogousMode::feature;
  Json out;
  out["mode"] = feature ? "feature" : "similarity";
  out["selected"] = r.selected;
  out["empty"] = r.empty;
  out["truncated"] = r.truncated;
  if (feature) {
    out["source"] = bar_extension_json(r.source, *in.clique_q, in.witness_qp->complex().scale());
    const ParameterScale& ws = in.witness_qp->complex().scale();
    Json duals = Json::array();
    for (const FeatureDual& d : r.duals)
      duals.push_back({{"terminal_index", d.terminal_index},
                       {"grade", d.at},
                       {"member", d.member},
                       {"dual_grade", d.dual_at},
                       {"eps", ws.value(d.dual_at)},
                       {"input", chain_json(d.dual.input)},
                       {"dual", chain_json(d.dual.dual)},
                       {"certificate", chain_json(d.dual.certificate)},
                       {"witness_class", representation_json(d.witness_class)},
                       {"extension", extension_json(d.extension, in.clique_p->complex().scale())}});
    out["duals"] = std::move(duals);
  } else {
    out["source"] = bar_extension_json(r.source, *in.witness_qp, in.clique_q->complex().scale());
    out["partner"] = r.partner ? Json(*r.partner) : Json(nullptr);
    out["target"] = r.target ? bar_extension_json(*r.target, *in.witness_pq,
                                                  in.clique_p->complex().scale())
                             : Json(nullptr);
  }
  const AnalogousPair pair = baseline_pair(r);
  out["baseline_pair"] = {{"q", pair.q_side}, {"p", pair.p_side}};
  Json aux = Json::array();
  for (auto [b, d] : r.diagnostics.aux_barcode) aux.push_back({b, d});
  out["diagnostics"] = {{"l0", r.diagnostics.l0},
                        {"aux_barcode", std::move(aux)},
                        {"message", r.diagnostics.message}};
  return out;
}

}  // namespace barbridge::cli
